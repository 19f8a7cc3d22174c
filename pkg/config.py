import os

seed = 543

# brute-force multiple sums refuse instances with more tuples than this
enumeration_cap = int(os.environ.get('POWERSUM_CAP', 2 * 10**7))

oracle_order = 24         # default truncation order of the series oracles
workers = 1               # process pool size for grid verification
grid_cap = 10**5          # largest accepted grid (points)

reconstruct_max_r = 12
reconstruct_extra_nodes = 2

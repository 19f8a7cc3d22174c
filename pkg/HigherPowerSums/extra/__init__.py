from HigherPowerSums.extra.suites import (
    Suite,
    suites
)
from HigherPowerSums.extra.tables import (
    table,
    render
)

class SingularSystem(ValueError):
    """Linear system has no unique solution"""

    def __init__(self, message: str = 'singular'):
        super().__init__(message)


class InconsistentSystem(ValueError):
    """Overdetermined system (or fitted ansatz) admits no exact solution"""

    def __init__(self, message: str = 'inconsistent'):
        super().__init__(message)


class InstanceTooLarge(Exception):
    """Instance exceeds a configured cap (enumeration size, reconstruction index)"""

    def __init__(self, size: int, cap: int):
        super().__init__(size, cap)
        self.size = size
        self.cap = cap

    def __str__(self):
        return f'instance too large: {self.size} > cap {self.cap}'


class InternalInconsistency(RuntimeError):
    """Two constructions of the same exact quantity disagree"""

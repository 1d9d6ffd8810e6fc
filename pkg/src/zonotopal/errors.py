class ZonotopalError(ValueError):
    """Precondition failure carrying a machine-readable ``code``."""

    code = "ERROR"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class KBelowMinusOne(ZonotopalError):
    code = "K_BELOW_MINUS_ONE"


class MissingHyperplanes(ZonotopalError):
    code = "J_MISSING_HYPERPLANES_FOR_INTERNAL"


class KernelCapExceeded(ZonotopalError):
    code = "KERNEL_CAP_EXCEEDED"


def check_k(k: int, minimum: int = -1) -> None:
    if k < -1:
        raise KBelowMinusOne(f"k = {k} < -1: no power-ideal construction is available")
    if k < minimum:
        raise ZonotopalError(f"k = {k} not supported here (need k >= {minimum})", "K_TOO_SMALL")

"""Plain coordinate containers shared by the Python and compiled kernels."""

from typing import NamedTuple


class PointXZ(NamedTuple):
    """Projective x-line point (X:Z) on a Montgomery curve; Z == 0 is infinity."""

    X: int
    Z: int

    def is_infinity(self) -> bool:
        return self.Z == 0


class PointYT(NamedTuple):
    """Projective y-line point (Y:T) on a twisted Edwards curve; Y == T is the identity."""

    Y: int
    T: int


class CurveCoeffs(NamedTuple):
    """Projective curve constants A24p = A'+2C', A24m = A'-2C', C24 = 4C'.

    Read as twisted Edwards constants these are a, d and a - d.
    """

    a24p: int
    a24m: int
    c24: int


INFINITY = PointXZ(1, 0)
IDENTITY = PointYT(1, 1)

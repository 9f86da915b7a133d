"""Index arithmetic: Riemann-Roch counts, chambers, ruled-surface classes.

Dimension counts for maps from line bundles into a fixed bundle on a
genus-g curve, the wall/chamber trichotomy for the abelian moduli
problem, and the intersection ring of the projectivization of a rank-2
bundle over the curve.  Everything is exact; the only non-integer in
sight is the rational chamber parameter.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "BundleType",
    "QuotProblem",
    "ChamberParams",
    "Chamber",
    "RuledSurfaceGeometry",
    "H2Class",
    "euler_char",
    "expected_dim",
    "abelian_v",
    "chamber_classify",
    "classify_tau",
    "intersect",
    "canonical_class",
    "spinc_det",
    "index_wc",
    "douady_index",
]


@dataclass(frozen=True)
class BundleType:
    """Topological type (rank, degree) of a bundle on the curve."""

    rank: int
    degree: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")


@dataclass(frozen=True)
class QuotProblem:
    """Subsheaf problem: kernel type mapping into a fixed target type."""

    genus: int
    kernel: BundleType
    target: BundleType

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")


class Chamber(enum.Enum):
    EMPTY_CHAMBER = "empty"
    INTERESTING_CHAMBER = "interesting"
    WALL = "wall"


@dataclass(frozen=True)
class ChamberParams:
    """Perturbation data for the abelian (rank-1 kernel) problem.

    t is the moment-map shift measured in units of 2*pi, so the wall
    comparison t*volume/(2*pi) against -degree is the exact rational
    t * volume.  Callers holding that rational directly can use
    classify_tau instead.
    """

    t: Fraction
    volume: Fraction
    kernel: BundleType

    def __post_init__(self):
        if self.volume <= 0:
            raise ValueError("volume must be positive")

    @property
    def tau(self) -> Fraction:
        return Fraction(self.t) * Fraction(self.volume)


def euler_char(b: BundleType, genus: int) -> int:
    """Holomorphic Euler characteristic d + r(1-g)."""
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    return b.degree + b.rank * (1 - genus)


def expected_dim(p: QuotProblem) -> int:
    """Expected dimension r*d0 - r0*d + r(r0-r)(1-g) of the quot problem."""
    r, d = p.kernel.rank, p.kernel.degree
    r0, d0 = p.target.rank, p.target.degree
    return r * d0 - r0 * d + r * (r0 - r) * (1 - p.genus)


def abelian_v(r0: int, d: int, d0: int, genus: int) -> int:
    """Rank-1 kernel specialization d0 - r0*d + (r0-1)(1-g)."""
    if r0 < 1:
        raise ValueError("target rank must be >= 1")
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    return d0 - r0 * d + (r0 - 1) * (1 - genus)


def classify_tau(tau: Fraction, kernel: BundleType) -> Chamber:
    """Chamber of the exact rational tau = t*volume/(2*pi), rank-1 only."""
    if kernel.rank != 1:
        raise NotImplementedError("chamber structure for rank > 1 kernels is out of scope")
    threshold = -kernel.degree
    if tau > threshold:
        return Chamber.INTERESTING_CHAMBER
    if tau < threshold:
        return Chamber.EMPTY_CHAMBER
    return Chamber.WALL


def chamber_classify(params: ChamberParams) -> Chamber:
    """Compare t against the wall at -2*pi*degree/volume, exactly."""
    return classify_tau(params.tau, params.kernel)


@dataclass(frozen=True)
class RuledSurfaceGeometry:
    """Projectivized rank-2 bundle over a genus-g curve.

    Classes in H^2 are written x*s + y*f with s the tautological section
    class and f the fibre; s.s = v0_degree, s.f = 1, f.f = 0.
    """

    genus: int
    v0_degree: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def signature(self) -> int:
        return 0

    @property
    def euler_number(self) -> int:
        return 4 * (1 - self.genus)


@dataclass(frozen=True)
class H2Class:
    """Integer class x*s + y*f on the ruled surface."""

    s: int
    f: int

    def __add__(self, other):
        return H2Class(self.s + other.s, self.f + other.f)

    def __sub__(self, other):
        return H2Class(self.s - other.s, self.f - other.f)

    def __neg__(self):
        return H2Class(-self.s, -self.f)

    def __rmul__(self, n: int):
        return H2Class(n * self.s, n * self.f)


def intersect(x: H2Class, y: H2Class, geom: RuledSurfaceGeometry) -> int:
    return x.s * y.s * geom.v0_degree + x.s * y.f + x.f * y.s


def canonical_class(geom: RuledSurfaceGeometry) -> H2Class:
    """-2s + (2g - 2 + d0) f; its square is 8(1-g) for every d0."""
    return H2Class(-2, 2 * geom.genus - 2 + geom.v0_degree)


def spinc_det(d: int, n: int, geom: RuledSurfaceGeometry) -> H2Class:
    """Determinant 2(d*f + n*s) - K of the structure twisted by d*f + n*s."""
    return 2 * H2Class(n, d) - canonical_class(geom)


def index_wc(c: H2Class, geom: RuledSurfaceGeometry) -> int:
    """Expected dimension c^2/4 + 2(g-1) of the monopole moduli space.

    Requires c^2 - 3*sig - 2*e divisible by 4, which here comes down to
    4 | c^2 since sig = 0 and e = 4(1-g).
    """
    csq = intersect(c, c, geom)
    if (csq - 3 * geom.signature - 2 * geom.euler_number) % 4:
        raise ValueError(f"class with square {csq} is not characteristic for this geometry")
    return csq // 4 + 2 * (geom.genus - 1)


def douady_index(m: H2Class, geom: RuledSurfaceGeometry) -> int:
    """Expected dimension m(m - K)/2 of the divisor moduli problem."""
    val = intersect(m, m - canonical_class(geom), geom)
    # integral classes on these geometries always give an even product
    assert val % 2 == 0, f"odd intersection number {val} for {m}"
    return val // 2

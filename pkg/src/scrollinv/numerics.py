"""Closed-form numerology of linearly normal scrolls and rank-two bundles.

Everything here is exact: integers are Python ints range-checked against
signed 64-bit where they come from formula arithmetic, counts that grow like
``2^g`` are unbounded, and slopes are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyWarning, DomainError, InvariantError, ParameterError

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _i64(value: int, what: str = "value") -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise ParameterError(f"{what} = {value} leaves the signed 64-bit range")
    return value


def _check_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParameterError(f"{name} must be an integer, got {value!r}")
    return _i64(value, name)


def _check_dg(d: int, g: int) -> None:
    _check_int("d", d)
    _check_int("g", g)
    if g < 0:
        raise ParameterError(f"genus g must be >= 0, got {g}")
    if d < 1:
        raise ParameterError(f"degree d must be >= 1, got {d}")


# -- validity ---------------------------------------------------------------


def hdg_bound(g: int) -> int:
    """Least degree ``2g + 3 + min(1, g - 1)`` for which H_{d,g} is defined."""
    return 2 * g + 3 + min(1, g - 1)


def in_hdg(d: int, g: int) -> bool:
    return d >= hdg_bound(g)


def is_smooth_range(d: int, g: int) -> bool:
    """Whether smooth non-special linearly normal scrolls exist for ``(d, g)``."""
    if g == 0:
        return True
    if g == 1:
        return d >= 5
    return d >= 2 * g + 4


def require_hdg(d: int, g: int) -> None:
    _check_dg(d, g)
    if not in_hdg(d, g):
        raise DomainError(
            f"(d, g) = ({d}, {g}) violates d >= 2g + 3 + min(1, g - 1) = {hdg_bound(g)}"
        )


@dataclass(frozen=True)
class ScrollParams:
    """Numerical data ``(d, g, h1, m)`` of a linearly normal scroll."""

    d: int
    g: int
    h1: int = 0
    m: int | None = None
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        _check_dg(self.d, self.g)
        _check_int("h1", self.h1)
        if self.h1 < 0:
            raise ParameterError(f"speciality h1 must be >= 0, got {self.h1}")
        if self.m is not None:
            _check_int("m", self.m)

    @property
    def in_hdg(self) -> bool:
        return in_hdg(self.d, self.g)

    @property
    def smooth(self) -> bool:
        return is_smooth_range(self.d, self.g)

    @property
    def R(self) -> int:
        return ambient_dim(self.d, self.g, self.h1)

    def validate(self, strict: bool = False) -> list[str]:
        """Return advisory messages; with ``strict`` raise on the first one."""
        msgs = []
        if not self.in_hdg:
            msgs.append(
                f"d = {self.d} is below the bound {hdg_bound(self.g)} for genus {self.g}"
            )
        if strict and msgs:
            raise DomainError(msgs[0])
        return msgs


# -- dimensions -------------------------------------------------------------


def expected_dim(d: int, g: int, m: int) -> int:
    """Expected dimension ``max(-1, 2m - d - g + 1)`` of the degree-m unisecant scheme."""
    _check_dg(d, g)
    _check_int("m", m)
    if m < 0:
        raise ParameterError(f"unisecant degree m must be >= 0, got {m}")
    return max(-1, _i64(2 * m - d - g + 1, "2m - d - g + 1"))


def ambient_dim(d: int, g: int, h1: int = 0, det_nonspecial: bool = False) -> int:
    """Projective dimension ``R = d - 2g + 1 + h1`` of a linearly normal scroll.

    With ``det_nonspecial`` the speciality bound ``h1 <= g`` is enforced.
    """
    _check_int("h1", h1)
    _check_dg(d, g)
    if h1 < 0:
        raise ParameterError(f"speciality h1 must be >= 0, got {h1}")
    if det_nonspecial and h1 > g:
        raise DomainError(f"h1 = {h1} violates h1 <= g = {g}")
    return _i64(d - 2 * g + 1 + h1, "R")


def section_count(d: int, g: int, h1: int = 0) -> int:
    """``h^0(O_F(1)) = R + 1``, obtained from Riemann-Roch as ``d - 2g + 2 + h1``."""
    return _i64(d - 2 * g + 2 + h1, "R + 1")


def hilbert_dim(d: int, g: int) -> int:
    """Dimension ``7(g - 1) + (d - 2g + 2)^2`` of the component H_{d,g}."""
    require_hdg(d, g)
    return _i64(7 * (g - 1) + (d - 2 * g + 2) ** 2, "dim H_{d,g}")


def parameter_count(d: int, g: int) -> list[tuple[str, int]]:
    """Break ``hilbert_dim(d, g)`` into moduli of curve, bundle and projectivities."""
    require_hdg(d, g)
    if g == 0:
        raise DomainError("no parameter breakdown is available for g = 0")
    r1 = ambient_dim(d, g) + 1
    if g >= 2:
        return [
            ("curve_moduli", 3 * g - 3),
            ("bundle_moduli", 4 * g - 3),
            ("projectivities", r1 * r1 - 1),
        ]
    stabilizer = d % 2 == 0  # dim G_S
    return [
        ("curve_moduli", 1),
        ("bundle_moduli", 2 if stabilizer else 1),
        ("projectivities", r1 * r1 - 1 - int(stabilizer)),
        ("curve_action", -1),
    ]


# -- minimal sections and index ---------------------------------------------


class FamilyKind(enum.Enum):
    FINITE = "finite"
    ONE_DIM = "one_dim"


@dataclass(frozen=True)
class MinimalSections:
    """Minimal unisecant degree and how many such curves there are."""

    degree: int
    kind: FamilyKind
    count: int | None = None  # only for FINITE


def _require_dg_advisory(d: int, g: int, strict: bool) -> None:
    if strict:
        require_hdg(d, g)
    else:
        _check_dg(d, g)


def min_unisecant_degree(d: int, g: int, strict: bool = False) -> MinimalSections:
    """Minimal degree of unisecant curves on the general scroll of H_{d,g}.

    ``d + g`` odd gives ``2^g`` isolated sections of degree ``(d + g - 1)/2``;
    ``d + g`` even gives a one-dimensional family in degree ``(d + g)/2``.
    """
    _require_dg_advisory(d, g, strict)
    if (d + g) % 2:
        return MinimalSections((d + g - 1) // 2, FamilyKind.FINITE, 2**g)
    return MinimalSections((d + g) // 2, FamilyKind.ONE_DIM)


def index(d: int, g: int, m: int, strict: bool = False) -> int:
    """Number of degree-m unisecants through ``expected_dim`` general points: ``2^g``."""
    _require_dg_advisory(d, g, strict)
    if expected_dim(d, g, m) <= 0:
        raise DomainError("index defined only for positive-dimensional families")
    return 2**g


def projection_reduction(d: int, g: int, m: int) -> ScrollParams:
    """Project from ``d_m`` general points of the scroll.

    The image has degree ``2d + g - 2m - 1``, the same genus, and the curves
    become sections of degree ``d + g - 1 - m``, which is minimal with
    ``d' + g`` odd. If the image leaves the range of H_{d',g}, the result
    carries a warning rather than raising.
    """
    dm = expected_dim(d, g, m)
    if dm <= 0:
        raise DomainError(f"projection needs expected_dim > 0, got {dm}")
    d2 = _i64(2 * d + g - 2 * m - 1, "d'")
    m2 = _i64(d + g - 1 - m, "m'")
    msgs = []
    if d2 < 1:
        raise DomainError(f"projected degree d' = {d2} is not positive")
    if not in_hdg(d2, g):
        msgs.append(
            f"projected scroll (d', g) = ({d2}, {g}) is below the bound "
            f"{hdg_bound(g)}; the index argument is used outside its stated range"
        )
    out = ScrollParams(d=d2, g=g, h1=0, m=m2, warnings=tuple(msgs))
    if (d2 + g) % 2 != 1 or expected_dim(d2, g, m2) != 0:
        raise InvariantError(f"projection of {(d, g, m)} gave {out}")
    return out


# -- slope and stability ----------------------------------------------------


def slope(degree: int, rank: int) -> Fraction:
    _check_int("degree", degree)
    _check_int("rank", rank)
    if rank < 1:
        raise ParameterError(f"rank must be >= 1, got {rank}")
    return Fraction(degree, rank)


@dataclass(frozen=True)
class DecomposableBundle:
    """``L_1 + L_2`` given by the degrees (and optionally specialities) of the summands."""

    summand_degrees: tuple[int, int]
    summand_h1: tuple[int, int] | None = None

    def __post_init__(self):
        if len(self.summand_degrees) != 2:
            raise ParameterError("a rank-two decomposable bundle has two summands")
        for x in self.summand_degrees:
            _check_int("summand degree", x)
        if self.summand_h1 is not None:
            if len(self.summand_h1) != 2:
                raise ParameterError("summand_h1 needs two entries")
            for x in self.summand_h1:
                _check_int("summand h1", x)
                if x < 0:
                    raise ParameterError(f"summand speciality must be >= 0, got {x}")

    @property
    def degree(self) -> int:
        return sum(self.summand_degrees)


class Stability(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityVerdict:
    kind: Stability
    slope: Fraction
    destabilizer: int | None = None  # index into summand_degrees

    def __post_init__(self):
        if (self.destabilizer is not None) != (self.kind is Stability.UNSTABLE):
            raise ParameterError("destabilizer is set exactly for unstable verdicts")


def classify_decomposable(b: DecomposableBundle) -> StabilityVerdict:
    """A direct sum is strictly semistable for equal degrees and unstable otherwise."""
    d1, d2 = b.summand_degrees
    mu = slope(d1 + d2, 2)
    if d1 == d2:
        return StabilityVerdict(Stability.STRICTLY_SEMISTABLE, mu)
    return StabilityVerdict(Stability.UNSTABLE, mu, 0 if d1 > d2 else 1)


class SublineVerdict(enum.Enum):
    WITNESSES_UNSTABLE = "witnesses_unstable"
    WITNESSES_STRICT_BOUND = "witnesses_strict_bound"
    CONSISTENT_WITH_STABLE = "consistent_with_stable"


def classify_subline(deg_n: int, d: int) -> SublineVerdict:
    """Compare a sub-line bundle degree with the slope ``d/2`` of a rank-two bundle."""
    mu = slope(d, 2)
    if deg_n > mu:
        return SublineVerdict.WITNESSES_UNSTABLE
    if deg_n == mu:
        return SublineVerdict.WITNESSES_STRICT_BOUND
    return SublineVerdict.CONSISTENT_WITH_STABLE


# -- speciality -------------------------------------------------------------


def speciality_decomposable(h1_summands) -> int:
    """Speciality of a direct sum of line bundles: the sum of the summands' h^1."""
    vals = list(h1_summands)
    if not vals:
        raise ParameterError("need at least one summand")
    for x in vals:
        _check_int("summand h1", x)
        if x < 0:
            raise ParameterError(f"speciality must be >= 0, got {x}")
    return sum(vals)


def cone_test(d: int, g: int, h1: int, decomposable_with_trivial_summand: bool) -> bool:
    """Whether speciality ``h1`` forces the scroll to be a cone (``h1 == g``).

    A cone verdict for a bundle not flagged as ``O_C + L`` emits a
    :class:`ConsistencyWarning`, since equality forces that splitting.
    """
    _check_dg(d, g)
    _check_int("h1", h1)
    if g < 1:
        raise DomainError("cone criterion needs g >= 1")
    if d < 2 * g + 2:
        raise DomainError(f"cone criterion needs d >= 2g + 2 = {2 * g + 2}, got {d}")
    if h1 < 0:
        raise ParameterError(f"speciality must be >= 0, got {h1}")
    if h1 > g:
        raise DomainError(f"h1 = {h1} violates h1 <= g = {g}")
    cone = h1 == g
    if cone and not decomposable_with_trivial_summand:
        warnings.warn(
            f"h1 = g = {g} forces F = O_C + L, but the bundle is not flagged as such",
            ConsistencyWarning,
            stacklevel=2,
        )
    return cone


# -- intersection numbers and thresholds ------------------------------------


def self_intersection(d: int, m: int) -> int:
    """Self-intersection ``2m - d`` of a degree-m section."""
    _check_int("d", d)
    _check_int("m", m)
    return _i64(2 * m - d, "B^2")


def canonical_class(d: int, g: int) -> tuple[int, int]:
    """Numerical class of ``K_F`` as ``(coeff of H, coeff of f) = (-2, d + 2g - 2)``."""
    _check_int("d", d)
    _check_int("g", g)
    return (-2, _i64(d + 2 * g - 2, "d + 2g - 2"))


def linearly_normal_threshold(d: int, g: int, m: int) -> bool:
    """On a non-special scroll, unisecants with ``m <= d - 2g + 1`` are linearly normal."""
    _check_dg(d, g)
    _check_int("m", m)
    if g < 1 or d < 2 * g + 2:
        raise DomainError(f"threshold needs g >= 1 and d >= 2g + 2, got (d, g) = ({d}, {g})")
    return m <= d - 2 * g + 1


class NonspecialRange(enum.Enum):
    ALL_SEMISTABLE = "all_semistable_nonspecial"
    GENERIC = "generic_nonspecial"
    NO_GUARANTEE = "no_guarantee"


def nonspecial_thresholds(d: int, g: int) -> NonspecialRange:
    _check_int("d", d)
    _check_int("g", g)
    if g < 1:
        raise DomainError("thresholds are stated for g >= 1")
    if d >= 4 * g - 3:
        return NonspecialRange.ALL_SEMISTABLE
    if g >= 2 and d >= 2 * g:
        return NonspecialRange.GENERIC
    return NonspecialRange.NO_GUARANTEE

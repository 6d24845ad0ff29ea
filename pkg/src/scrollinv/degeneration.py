"""Combinatorics of the reducible limits ``T = X + Q`` and ``Y = W + Q_1 + ... + Q_g``.

A unisecant curve on ``Y`` is a unisecant on the rational normal scroll
``W`` glued to a line or a conic on each quadric ``Q_i``; which of the two
rulings ``l_{1,i}``, ``l_{2,i}`` it passes through the chosen point of is
recorded by a :class:`Labeling`. Genericity of the gluing is assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError, InfeasibleError, ParameterError, ResourceError
from .numerics import _check_dg, expected_dim, min_unisecant_degree, require_hdg

MAX_ENUM_G = 20


class Parity(enum.Enum):
    ODD = "odd"
    EVEN = "even"

    @classmethod
    def of(cls, d: int, g: int) -> Parity:
        return cls.ODD if (d + g) % 2 else cls.EVEN


@dataclass(frozen=True, order=True)
class Labeling:
    """A map ``{1..g} -> {1, 2}`` stored as a g-bit word.

    Position 1 is the most significant bit and choice 2 is a set bit, so
    integer order on words is lexicographic order with ``1 < 2``.
    """

    g: int
    word: int

    def __post_init__(self):
        if self.g < 0:
            raise ParameterError(f"labeling length must be >= 0, got {self.g}")
        if not 0 <= self.word < (1 << self.g):
            raise ParameterError(f"word {self.word} does not fit in {self.g} bits")

    @classmethod
    def from_choices(cls, choices) -> Labeling:
        choices = tuple(choices)
        word = 0
        for c in choices:
            if c not in (1, 2):
                raise ParameterError(f"choices must be 1 or 2, got {c!r}")
            word = (word << 1) | (c - 1)
        return cls(len(choices), word)

    @property
    def choices(self) -> tuple[int, ...]:
        return tuple(((self.word >> (self.g - p)) & 1) + 1 for p in range(1, self.g + 1))

    def choice(self, position: int) -> int:
        if not 1 <= position <= self.g:
            raise ParameterError(f"position must be in 1..{self.g}, got {position}")
        return ((self.word >> (self.g - position)) & 1) + 1

    @property
    def bits(self) -> str:
        return format(self.word, f"0{self.g}b") if self.g else ""

    def __str__(self) -> str:
        return "".join(str(c) for c in self.choices)

    def restrict_away(self, position: int) -> Labeling:
        """Drop ``position``; the remaining positions keep their order."""
        self.choice(position)
        b = self.g - position
        p = ((self.word >> (b + 1)) << b) | (self.word & ((1 << b) - 1))
        return Labeling(self.g - 1, p)

    def extend_at(self, position: int, choice: int) -> Labeling:
        """Insert ``choice`` so that it becomes the value at ``position`` of a length g+1 labeling."""
        g = self.g + 1
        if not 1 <= position <= g or choice not in (1, 2):
            raise ParameterError(f"cannot insert {choice} at position {position}")
        b = g - position
        hi = (self.word >> b) << (b + 1)
        lo = self.word & ((1 << b) - 1)
        return Labeling(g, hi | ((choice - 1) << b) | lo)

    def hamming(self, other: Labeling) -> int:
        if self.g != other.g:
            raise ParameterError("labelings of different length")
        return (self.word ^ other.word).bit_count()


def all_labelings(g: int) -> list[Labeling]:
    return [Labeling(g, w) for w in range(1 << g)]


class ComponentKind(enum.Enum):
    XI = "xi"  # pencil of unisecants, lines on every quadric
    XI_PRIME = "xi_prime"  # conics on one quadric, lines elsewhere


@dataclass(frozen=True)
class LimitComponent:
    kind: ComponentKind
    labeling: Labeling  # full for XI, partial (length g - 1) for XI_PRIME
    k: int
    degree_on_w: int
    family_dim: int
    conic_quadric: int | None = None  # l, XI_PRIME only

    @property
    def ident(self) -> str:
        if self.kind is ComponentKind.XI:
            return f"xi_{self.labeling.bits}"
        return f"xip_{self.conic_quadric}_{self.labeling.bits}"


# -- admissibility bookkeeping ----------------------------------------------


def _check_parity(d: int, g: int, parity: Parity) -> None:
    if Parity.of(d, g) is not parity:
        raise DomainError(f"d + g = {d + g} does not have {parity.value} parity")


def minimal_w_degree(d: int, g: int) -> int:
    """Least unisecant degree on the balanced rational normal scroll ``W`` of degree ``d - 2g``."""
    if d - 2 * g < 1:
        raise DomainError(f"W would have degree d - 2g = {d - 2 * g} < 1")
    return min_unisecant_degree(d - 2 * g, 0).degree


def residual_dim(g: int, k: int, parity: Parity) -> int:
    """Dimension of the image of ``Lambda_k`` cut by the ``g - k`` hyperplanes ``H_t``.

    This is ``max(-1, -k)`` for odd ``d + g`` and ``max(-1, 1 - k)`` for even.
    """
    raw = (g - 2 * k if parity is Parity.ODD else g + 1 - 2 * k) - (g - k)
    return max(-1, raw)


def admissible_k(d: int, g: int, parity: Parity, strict: bool = False) -> list[int]:
    """Conic counts ``k`` for which limit unisecants exist on ``Y``."""
    (require_hdg if strict else _check_dg)(d, g)
    _check_parity(d, g, parity)
    return [k for k in range(g + 1) if residual_dim(g, k, parity) >= 0]


def w_degree(d: int, g: int, k: int, parity: Parity) -> int:
    """Degree on ``W`` of a limit unisecant with ``k`` conics.

    Odd: ``(d + g - 1)/2 - 2k - (g - k)``. Even: ``(d + g)/2 - 2k - (g - k)``.
    """
    _check_dg(d, g)
    _check_parity(d, g, parity)
    if k < 0 or k > g:
        raise InfeasibleError(f"conic count k = {k} must lie in 0..{g}")
    top = (d + g - 1) // 2 if parity is Parity.ODD else (d + g) // 2
    deg = top - 2 * k - (g - k)
    floor = minimal_w_degree(d, g)
    if deg < floor:
        raise InfeasibleError(
            f"W-degree {deg} for k = {k} is below the minimal degree {floor} on W"
        )
    return deg


def lambda_dim(g: int, k: int, parity: Parity) -> int:
    """Dimension of the complete linear system ``Lambda_k`` on ``W``."""
    dim = g - 2 * k if parity is Parity.ODD else g + 1 - 2 * k
    if k < 0 or dim < 0:
        raise InfeasibleError(f"Lambda_k has negative dimension {dim} for g = {g}, k = {k}")
    return dim


# -- enumerations -----------------------------------------------------------


def _check_cap(count: int, cap: int | None) -> None:
    limit = 2**MAX_ENUM_G if cap is None else min(cap, 2**MAX_ENUM_G)
    if count > limit:
        raise ResourceError(f"enumeration of {count} items exceeds the cap of {limit}")


def count_limit_unisecants_odd(d: int, g: int) -> int:
    _check_dg(d, g)
    _check_parity(d, g, Parity.ODD)
    return 2**g


def limit_unisecants_odd(d: int, g: int, strict: bool = False, cap: int | None = None) -> list[Labeling]:
    """The ``2^g`` minimal sections of the limit ``Y``, in lexicographic order.

    Each has W-degree ``w_degree(d, g, 0, ODD)`` and lines on every quadric.
    """
    (require_hdg if strict else _check_dg)(d, g)
    _check_parity(d, g, Parity.ODD)
    _check_cap(2**g, cap)
    return all_labelings(g)


def count_limit_components_even(g: int) -> tuple[int, int]:
    """``(#XI, #XI_PRIME) = (2^g, g 2^(g-1))`` without enumerating."""
    if g < 1:
        raise DomainError("the even-case limit needs g >= 1")
    return 2**g, g * 2 ** (g - 1)


def limit_components_even(d: int, g: int, strict: bool = False, cap: int | None = None) -> list[LimitComponent]:
    """Components of the limit of the one-dimensional minimal family.

    All XI components first (lexicographic labelings), then XI_PRIME ordered
    by quadric ``l`` and partial labeling on the remaining positions.
    """
    (require_hdg if strict else _check_dg)(d, g)
    _check_parity(d, g, Parity.EVEN)
    if g < 1:
        raise DomainError("the even-case limit needs g >= 1")
    n_xi, n_xip = count_limit_components_even(g)
    _check_cap(n_xi + n_xip, cap)
    ks = admissible_k(d, g, Parity.EVEN)
    if ks != [0, 1]:
        raise InfeasibleError(f"expected conic counts [0, 1], got {ks}")
    deg0, dim0 = w_degree(d, g, 0, Parity.EVEN), lambda_dim(g, 0, Parity.EVEN)
    deg1, dim1 = w_degree(d, g, 1, Parity.EVEN), lambda_dim(g, 1, Parity.EVEN)
    out = [LimitComponent(ComponentKind.XI, lab, 0, deg0, dim0) for lab in all_labelings(g)]
    for l in range(1, g + 1):
        for part in all_labelings(g - 1):
            out.append(LimitComponent(ComponentKind.XI_PRIME, part, 1, deg1, dim1, l))
    return out


# -- splitting on T = X + Q --------------------------------------------------


@dataclass(frozen=True)
class SplittingEntry:
    """One irreducible piece of the unisecant scheme on ``T``: degree ``m_x`` on ``X``."""

    m_x: int
    dim_on_x: int
    dim_component: int


def splitting_range(d: int, g: int, m: int) -> list[SplittingEntry]:
    """Degrees ``m_x`` on ``X`` of the limit pieces, ``floor((d+g-3)/2) <= m_x <= m - 1``.

    ``X`` is a general scroll of degree ``d - 2`` and genus ``g - 1``. Empty
    when ``expected_dim(d, g, m) == -1``.
    """
    _check_dg(d, g)
    if g < 1:
        raise DomainError("the splitting T = X + Q needs g >= 1")
    dm = expected_dim(d, g, m)
    if dm < 0:
        return []
    lo = (d + g - 3) // 2
    return [SplittingEntry(mx, expected_dim(d - 2, g - 1, mx), dm) for mx in range(lo, m)]

"""Square-free monomial arithmetic modelling the Chow ring of ``(P^1)^{2g}``.

Generator ``r_{j,i}`` (ruling ``j`` in {1, 2} on factor ``i`` in 1..g) is
bit ``2(i-1) + (j-1)`` of a monomial mask, so masks order monomials by
factor first and ruling second. Every generator squares to zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import _backend
from .errors import DomainError, ParameterError, ResourceError

MAX_TERMS = 2**22


@dataclass(frozen=True, order=True)
class Generator:
    ruling: int  # j
    factor: int  # i

    @property
    def bit(self) -> int:
        return 2 * (self.factor - 1) + (self.ruling - 1)

    def __str__(self) -> str:
        return f"r[{self.ruling},{self.factor}]"


def generator_bit(ruling: int, factor: int, g: int) -> int:
    if ruling not in (1, 2):
        raise ParameterError(f"ruling index must be 1 or 2, got {ruling}")
    if not 1 <= factor <= g:
        raise ParameterError(f"factor index must be in 1..{g}, got {factor}")
    return 2 * (factor - 1) + (ruling - 1)


def monomial_generators(mask: int) -> list[Generator]:
    """Generators in a mask, in canonical (factor, ruling) order."""
    out = []
    bit = 0
    while mask:
        if mask & 1:
            out.append(Generator(ruling=bit % 2 + 1, factor=bit // 2 + 1))
        mask >>= 1
        bit += 1
    return out


def format_monomial(mask: int) -> str:
    return "".join(str(x) for x in monomial_generators(mask))


@dataclass(frozen=True)
class CycleClass:
    """Integer combination of square-free monomials, ``terms = {mask: coeff}``."""

    ambient_g: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.ambient_g < 1:
            raise ParameterError(f"ambient genus must be >= 1, got {self.ambient_g}")
        limit = 1 << (2 * self.ambient_g)
        clean = {}
        for k, c in self.terms.items():
            if not 0 <= k < limit:
                raise ParameterError(f"monomial mask {k:#x} uses generators outside 2g = {2 * self.ambient_g}")
            if c:
                clean[k] = c
        if len(clean) > MAX_TERMS:
            raise ResourceError(f"{len(clean)} terms exceed the cap of {MAX_TERMS}")
        object.__setattr__(self, "terms", clean)

    # construction helpers
    @classmethod
    def zero(cls, g: int) -> CycleClass:
        return cls(g, {})

    @classmethod
    def one(cls, g: int) -> CycleClass:
        return cls(g, {0: 1})

    @classmethod
    def generator(cls, ruling: int, factor: int, g: int) -> CycleClass:
        return cls(g, {1 << generator_bit(ruling, factor, g): 1})

    # ring operations
    def _same(self, other: CycleClass) -> None:
        if not isinstance(other, CycleClass):
            raise TypeError(f"expected CycleClass, got {type(other).__name__}")
        if other.ambient_g != self.ambient_g:
            raise ParameterError(
                f"ambient genera differ: {self.ambient_g} vs {other.ambient_g}"
            )

    def __add__(self, other: CycleClass) -> CycleClass:
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return CycleClass(self.ambient_g, out)

    def __neg__(self) -> CycleClass:
        return CycleClass(self.ambient_g, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: CycleClass) -> CycleClass:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return CycleClass(self.ambient_g, {k: c * other for k, c in self.terms.items()})
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleClass):
            return NotImplemented
        return self.ambient_g == other.ambient_g and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ambient_g, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def degree_set(self) -> set[int]:
        return {k.bit_count() for k in self.terms}

    def __str__(self) -> str:
        return format_class(self)


def mul(a: CycleClass, b: CycleClass) -> CycleClass:
    """Product in the square-free ring; monomials sharing a generator vanish."""
    a._same(b)
    bound = len(a.terms) * len(b.terms)
    out = _backend.sqfree_mul(a.terms, b.terms)
    if bound > MAX_TERMS and len(out) > MAX_TERMS:
        raise ResourceError(f"product has {len(out)} terms, cap is {MAX_TERMS}")
    return CycleClass(a.ambient_g, out)


def hyperplane_class(i: int, g: int) -> CycleClass:
    """Pull-back ``H_i = r_{1,i} + r_{2,i}`` of the hyperplane of factor ``i``."""
    if isinstance(g, bool) or not isinstance(g, int) or g < 1:
        raise ParameterError(f"g must be a positive integer, got {g!r}")
    if not 1 <= i <= g:
        raise ParameterError(f"factor index must be in 1..{g}, got {i}")
    return CycleClass.generator(1, i, g) + CycleClass.generator(2, i, g)


def product_h_term_count(g: int) -> int:
    """Number of monomials of ``H_1 ... H_g`` without expanding: the ``H_i`` have
    disjoint supports of two generators each, so nothing cancels."""
    if g < 1:
        raise ParameterError(f"g must be >= 1, got {g}")
    count = 1
    for i in range(1, g + 1):
        count *= len(hyperplane_class(i, g).terms) if g <= 64 else 2
    return count


def product_h(g: int) -> CycleClass:
    """Expand ``H_1 H_2 ... H_g``; one monomial per choice of ruling on each factor."""
    if isinstance(g, bool) or not isinstance(g, int) or g < 1:
        raise ParameterError(f"g must be a positive integer, got {g!r}")
    if 2**g > MAX_TERMS:
        raise ResourceError(f"H_1...H_g has 2^{g} terms, cap is {MAX_TERMS}")
    acc = CycleClass.one(g)
    for i in range(1, g + 1):
        acc = acc * hyperplane_class(i, g)
    return acc


def is_transversal(mask: int, g: int) -> bool:
    """Whether a monomial picks exactly one generator on each factor."""
    return _backend.kernels.first_non_transversal([mask], g) == -1


def pair_with_v0(c: CycleClass) -> int:
    """Intersect with the cycle ``V_0`` of the limit linear system.

    Each transversal monomial meets ``V_0`` in one point, so the pairing is
    the sum of coefficients. Any other monomial is rejected: its pairing is
    not determined by the model.
    """
    keys = sorted(c.terms)
    bad = _backend.kernels.first_non_transversal(keys, c.ambient_g)
    if bad >= 0:
        mono = format_monomial(keys[bad]) or "1"
        raise DomainError(
            f"monomial {mono} does not pick one generator per factor; "
            "its pairing with V_0 is undefined"
        )
    return sum(c.terms.values())


# -- text form --------------------------------------------------------------


def format_class(c: CycleClass) -> str:
    """Serialise as ``+c·r[j,i]r[j,i]...`` terms in ascending mask order; ``0`` if empty."""
    if not c.terms:
        return "0"
    parts = []
    for k in sorted(c.terms):
        coeff = c.terms[k]
        sign = "+" if coeff > 0 else "-"
        mono = format_monomial(k)
        parts.append(f"{sign}{abs(coeff)}" + (f"·{mono}" if mono else ""))
    return " ".join(parts)


_TERM = re.compile(r"([+-])(\d+)(?:·((?:r\[[12],\d+\])+))?$")
_GEN = re.compile(r"r\[([12]),(\d+)\]")


def parse_class(text: str, g: int) -> CycleClass:
    """Inverse of :func:`format_class`."""
    text = text.strip()
    if text == "0":
        return CycleClass.zero(g)
    out: dict = {}
    for tok in text.split():
        match = _TERM.match(tok)
        if not match:
            raise ParameterError(f"cannot parse term {tok!r}")
        sign, coeff, mono = match.groups()
        mask = 0
        for j, i in _GEN.findall(mono or ""):
            bit = 1 << generator_bit(int(j), int(i), g)
            if mask & bit:
                mask = -1
                break
            mask |= bit
        if mask < 0:
            continue  # repeated generator: the term is zero
        out[mask] = out.get(mask, 0) + (int(coeff) if sign == "+" else -int(coeff))
    return CycleClass(g, out)

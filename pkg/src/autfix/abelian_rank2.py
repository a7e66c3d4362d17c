"""Automorphisms of Z_{p^a} + Z_{p^b} (a < b) as explicit 2x2 matrices.

Every automorphism has the form

    ( alpha        beta  )
    ( c * p^(b-a)  delta )

with alpha a unit mod p^a, beta and c arbitrary mod p^a, delta a unit mod
p^b.  The lower-left entry is stored through its cofactor ``c`` so the
enumeration domain is exactly (Z_{p^a}^*, Z_{p^a}, Z_{p^a}, Z_{p^b}^*).

Elements are column vectors (x mod p^a, y mod p^b).
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from autfix.errors import CapExceededError, InvalidInputError, UnsupportedError
from autfix.modarith import MAX_MODULUS, is_prime, units
from autfix.spectrum import Spectrum, merge_counters

SPECTRUM_CAP = 2**20
# bound on the (delta x element) block evaluated per numpy call
_BLOCK_CELLS = 1 << 22


@dataclass(frozen=True)
class Rank2PGroup:
    p: int
    a: int
    b: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInputError(f"{self.p} is not prime")
        if self.a < 1 or self.b < 1:
            raise InvalidInputError("exponents must be >= 1")
        if self.a >= self.b:
            raise UnsupportedError(
                f"need a < b, got a={self.a}, b={self.b}; "
                "equal exponents share a direct factor (use the oracle)"
            )
        if self.p ** (self.a + self.b) > MAX_MODULUS:
            raise CapExceededError(f"|G| = {self.p}^{self.a + self.b} exceeds 2**31")

    @property
    def pa(self) -> int:
        return self.p**self.a

    @property
    def pb(self) -> int:
        return self.p**self.b

    @property
    def shift(self) -> int:
        """p^(b-a), the factor carried by the lower-left entry."""
        return self.p ** (self.b - self.a)

    @property
    def order(self) -> int:
        return self.pa * self.pb

    @property
    def label(self) -> str:
        return f"Z_{self.pa}+Z_{self.pb}"

    def elements(self) -> list[GElement]:
        """All elements, lexicographic in (x, y)."""
        return [GElement(x, y) for x in range(self.pa) for y in range(self.pb)]

    def index(self, e: GElement) -> int:
        return e.x * self.pb + e.y

    def add(self, e1: GElement, e2: GElement) -> GElement:
        return GElement((e1.x + e2.x) % self.pa, (e1.y + e2.y) % self.pb)

    def neg(self, e: GElement) -> GElement:
        return GElement(-e.x % self.pa, -e.y % self.pb)

    def zero(self) -> GElement:
        return GElement(0, 0)

    def contains(self, e: GElement) -> bool:
        return 0 <= e.x < self.pa and 0 <= e.y < self.pb


class GElement(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True, order=True)
class AutMatrix:
    group: Rank2PGroup
    alpha: int
    beta: int
    c: int
    delta: int

    def __post_init__(self):
        g = self.group
        for name, v, m in (("alpha", self.alpha, g.pa), ("beta", self.beta, g.pa),
                           ("c", self.c, g.pa), ("delta", self.delta, g.pb)):
            if not 0 <= v < m:
                raise InvalidInputError(f"{name}={v} not canonical mod {m}")
        if self.alpha % g.p == 0 or self.delta % g.p == 0:
            raise InvalidInputError("alpha and delta must be units")

    @property
    def lower_left(self) -> int:
        """The raw matrix entry c * p^(b-a) mod p^b."""
        return self.c * self.group.shift % self.group.pb

    def key(self) -> tuple[int, int, int, int]:
        return (self.alpha, self.beta, self.c, self.delta)

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta}; {self.lower_left}, {self.delta})"


def identity(g: Rank2PGroup) -> AutMatrix:
    return AutMatrix(g, 1, 0, 0, 1)


def aut_order(g: Rank2PGroup) -> int:
    """|Aut G| = phi(p^a) phi(p^b) p^(2a) = p^(3a+b-2) (p-1)^2."""
    return g.p ** (3 * g.a + g.b - 2) * (g.p - 1) ** 2


def enumerate_aut(g: Rank2PGroup, alphas: Iterable[int] | None = None) -> Iterator[AutMatrix]:
    """Yield every automorphism once, lexicographic in (alpha, beta, c, delta).

    ``alphas`` restricts the first coordinate; used to split the work.
    """
    alpha_range = units(g.pa).members if alphas is None else alphas
    deltas = units(g.pb).members
    for alpha in alpha_range:
        for beta, c in itertools.product(range(g.pa), repeat=2):
            for delta in deltas:
                yield AutMatrix(g, alpha, beta, c, delta)


def _check_element(g: Rank2PGroup, e: GElement) -> None:
    if not g.contains(e):
        raise InvalidInputError(f"{tuple(e)} is not a canonical element of {g.label}")


def apply(m: AutMatrix, e: GElement) -> GElement:
    g = m.group
    _check_element(g, e)
    return GElement(
        (m.alpha * e.x + m.beta * e.y) % g.pa,
        (m.c * g.shift * e.x + m.delta * e.y) % g.pb,
    )


def compose(m1: AutMatrix, m2: AutMatrix) -> AutMatrix:
    """The automorphism e -> m1(m2(e)), read back from generator images.

    beta lives mod p^a while y lives mod p^b, so an entry-wise product of
    the two matrices is not well defined; the images of (1,0) and (0,1)
    determine the result unambiguously.
    """
    if m1.group != m2.group:
        raise InvalidInputError("automorphisms of different groups")
    g = m1.group
    col1 = apply(m1, apply(m2, GElement(1, 0)))
    col2 = apply(m1, apply(m2, GElement(0, 1)))
    # col1.y is a multiple of p^(b-a); its cofactor is only defined mod p^a
    c = (col1.y // g.shift) % g.pa
    return AutMatrix(g, col1.x, col2.x, c, col2.y)


def as_permutation(m: AutMatrix) -> tuple[int, ...]:
    """Images of the elements as indices into ``group.elements()``."""
    g = m.group
    return tuple(g.index(apply(m, e)) for e in g.elements())


def fixed_set(m: AutMatrix) -> frozenset[GElement]:
    g = m.group
    low = m.c * g.shift
    return frozenset(
        GElement(x, y)
        for x in range(g.pa)
        for y in range(g.pb)
        if (m.alpha * x + m.beta * y) % g.pa == x and (low * x + m.delta * y) % g.pb == y
    )


def is_fpf_shift(m: AutMatrix) -> bool:
    """True iff m - id is again an automorphism (i.e. m fixes only 0)."""
    p = m.group.p
    return math.gcd(m.alpha - 1, p) == 1 and math.gcd(m.delta - 1, p) == 1


def _tally_fixed_sizes(g: Rank2PGroup, alphas: tuple[int, ...]) -> Counter:
    """Fixed-set sizes of every automorphism whose alpha is in ``alphas``.

    Vectorized over delta and over the elements; the Python loop runs over
    (alpha, beta, c) only.
    """
    pa, pb, s = g.pa, g.pb, g.shift
    xs = np.repeat(np.arange(pa, dtype=np.int64), pb)
    ys = np.tile(np.arange(pb, dtype=np.int64), pa)
    deltas = np.asarray(units(pb).members, dtype=np.int64)
    step = max(1, _BLOCK_CELLS // g.order)
    tally: Counter = Counter()
    for alpha in alphas:
        for beta in range(pa):
            top = ((alpha - 1) * xs + beta * ys) % pa == 0
            xs_top, ys_top = xs[top], ys[top]
            for c in range(pa):
                low_x = (c * s * xs_top) % pb
                for start in range(0, len(deltas), step):
                    dm1 = deltas[start:start + step, None] - 1
                    ok = (low_x[None, :] + dm1 * ys_top[None, :]) % pb == 0
                    tally.update(ok.sum(axis=1).tolist())
    return tally


def theta_spectrum(g: Rank2PGroup, workers: int = 1, max_order: int = SPECTRUM_CAP) -> Spectrum:
    """theta(G, d) for every divisor d of |G|, by full enumeration.

    With ``workers > 1`` the automorphisms are split by alpha across
    processes; the merged tally does not depend on the split.
    """
    if g.order > max_order:
        raise CapExceededError(f"|G| = {g.order} exceeds enumeration cap {max_order}")
    alphas = units(g.pa).members
    if workers <= 1 or len(alphas) == 1:
        tally = _tally_fixed_sizes(g, alphas)
    else:
        chunks = [alphas[i::workers] for i in range(workers) if alphas[i::workers]]
        with ProcessPoolExecutor(max_workers=len(chunks)) as ex:
            tally = merge_counters(ex.map(_tally_fixed_sizes, [g] * len(chunks), chunks))
    return Spectrum.from_counter(g.label, g.order, tally)


@dataclass(frozen=True)
class Subgroup:
    name: str
    generators: tuple[GElement, ...]
    elements: frozenset[GElement]

    def __len__(self) -> int:
        return len(self.elements)


def span(g: Rank2PGroup, gens: Iterable[GElement]) -> frozenset[GElement]:
    """The subgroup generated by ``gens`` (closure under addition)."""
    seen = {g.zero()}
    frontier = [g.zero()]
    gens = list(gens)
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                f = g.add(e, s)
                if f not in seen:
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return frozenset(seen)


def subgroups_order_p2(g: Rank2PGroup) -> list[Subgroup]:
    """The p+1 subgroups of order p^2 of Z_p + Z_{p^2}.

    J_k = <(k, 1)> for k in [0, p-1] and J_p = <(1, 0), (0, p)>.
    """
    if (g.a, g.b) != (1, 2):
        raise UnsupportedError("only defined for Z_p + Z_{p^2}")
    p = g.p
    out = []
    for k in range(p):
        gens = (GElement(k, 1),)
        out.append(Subgroup(f"J_{k}", gens, span(g, gens)))
    gens = (GElement(1, 0), GElement(0, p))
    out.append(Subgroup(f"J_{p}", gens, span(g, gens)))
    return out


def at_least_fixers(g: Rank2PGroup, xs: Iterable[GElement]) -> list[AutMatrix]:
    """Automorphisms fixing every element of ``xs`` (possibly more)."""
    xs = list(xs)
    if not xs:
        raise InvalidInputError("need a non-empty set of elements")
    for e in xs:
        _check_element(g, e)
    return [m for m in enumerate_aut(g) if all(apply(m, e) == e for e in xs)]


def is_subgroup(g: Rank2PGroup, h: Iterable[GElement]) -> bool:
    h = frozenset(h)
    if not h or not all(g.contains(e) for e in h):
        return False
    # finite and non-empty: closure under addition is enough
    return all(g.add(e1, e2) in h for e1 in h for e2 in h)


def exact_fixers(g: Rank2PGroup, h: Iterable[GElement]) -> list[AutMatrix]:
    """Automorphisms whose fixed set is exactly ``h``."""
    h = frozenset(h)
    if not is_subgroup(g, h):
        raise InvalidInputError("h is not a subgroup")
    return [m for m in at_least_fixers(g, h) if fixed_set(m) == h]

"""Cayley-table brute force: automorphisms of small groups from scratch.

This module does not import the matrix or holomorph realizations. Groups
are plain multiplication tables; automorphisms are found by mapping a
small generating set to every order-compatible tuple of images, extending
along a spanning tree of the Cayley graph, and keeping the extensions that
are bijective and preserve the whole table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from autfix.errors import CapExceededError, InvalidInputError, UnsupportedError
from autfix.spectrum import Spectrum

ORACLE_CAP = 512
MAX_GENERATORS = 3
_EXHAUSTIVE_ASSOC = 64
_ASSOC_SAMPLES = 10_000


class CayleyGroup:
    """A finite group given by its full multiplication table.

    ``table[x, y]`` is the index of the product x*y.
    """

    def __init__(self, table, labels: Sequence[str] | None = None, identity: int | None = None):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
            raise InvalidInputError("table must be a non-empty square matrix")
        size = table.shape[0]
        if table.min() < 0 or table.max() >= size:
            raise InvalidInputError("table entries out of range")
        ar = np.arange(size)
        if identity is None:
            rows = np.flatnonzero((table == ar).all(axis=1))
            if len(rows) != 1:
                raise InvalidInputError("no unique identity element")
            identity = int(rows[0])
        if not (np.array_equal(table[identity], ar) and np.array_equal(table[:, identity], ar)):
            raise InvalidInputError(f"element {identity} is not a two-sided identity")
        srt = np.sort(table, axis=1)
        if not (np.all(srt == ar) and np.all(np.sort(table, axis=0) == ar[:, None])):
            raise InvalidInputError("table is not a Latin square")
        self.table = table
        self.size = size
        self.identity = identity
        self.labels = list(labels) if labels is not None else [str(i) for i in range(size)]
        if len(self.labels) != size:
            raise InvalidInputError("one label per element required")
        self._check_associative()
        self.inverse = np.argmax(table == identity, axis=1)
        self.orders = self._element_orders()

    def _check_associative(self) -> None:
        t = self.table
        if self.size <= _EXHAUSTIVE_ASSOC:
            lhs = t[t[:, :, None], np.arange(self.size)[None, None, :]]
            rhs = t[np.arange(self.size)[:, None, None], t[None, :, :]]
            ok = np.array_equal(lhs, rhs)
        else:
            rng = np.random.default_rng(0)
            x, y, z = rng.integers(0, self.size, size=(3, _ASSOC_SAMPLES))
            ok = np.array_equal(t[t[x, y], z], t[x, t[y, z]])
        if not ok:
            raise InvalidInputError("table is not associative")

    def _element_orders(self) -> np.ndarray:
        orders = np.zeros(self.size, dtype=np.int64)
        power = np.arange(self.size)
        k = 1
        while (orders == 0).any():
            hit = (power == self.identity) & (orders == 0)
            orders[hit] = k
            power = self.table[power, np.arange(self.size)]
            k += 1
        return orders

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def center(self) -> list[int]:
        t = self.table
        return [int(x) for x in range(self.size) if np.array_equal(t[x], t[:, x])]

    def exponent(self) -> int:
        return int(np.lcm.reduce(self.orders))

    def __len__(self) -> int:
        return self.size


@dataclass(frozen=True, order=True)
class AutPermutation:
    image: tuple[int, ...]

    def fixed_count(self) -> int:
        return sum(i == x for i, x in enumerate(self.image))


def build_direct_sum(moduli: Sequence[int], max_order: int = ORACLE_CAP) -> CayleyGroup:
    """Z_m1 + ... + Z_mk with elements listed lexicographically by coordinates."""
    moduli = [int(m) for m in moduli]
    if not moduli or any(m < 2 for m in moduli):
        raise InvalidInputError("moduli must be integers >= 2")
    size = int(np.prod(moduli))
    if size > max_order:
        raise CapExceededError(f"group order {size} exceeds oracle cap {max_order}")
    coords = np.array(list(itertools.product(*(range(m) for m in moduli))), dtype=np.int64)
    mods = np.array(moduli, dtype=np.int64)
    radix = np.ones(len(moduli), dtype=np.int64)
    for k in range(len(moduli) - 2, -1, -1):
        radix[k] = radix[k + 1] * mods[k + 1]
    summed = (coords[:, None, :] + coords[None, :, :]) % mods
    table = summed @ radix
    labels = ["(" + ",".join(map(str, c)) + ")" for c in coords.tolist()]
    return CayleyGroup(table, labels, identity=0)


def build_dihedral(n: int, max_order: int = ORACLE_CAP) -> CayleyGroup:
    """D_2n: index i is a^i, index n + i is a^i b; b a^j = a^(-j) b."""
    if not 3 <= n <= 128:
        raise UnsupportedError(f"dihedral oracle needs 3 <= n <= 128, got {n}")
    if 2 * n > max_order:
        raise CapExceededError(f"group order {2 * n} exceeds oracle cap {max_order}")
    idx = np.arange(2 * n)
    rot, ref = idx % n, idx // n
    sign = 1 - 2 * ref
    new_rot = (rot[:, None] + sign[:, None] * rot[None, :]) % n
    new_ref = ref[:, None] ^ ref[None, :]
    table = new_rot + n * new_ref

    def label(i, r):
        s = "1" if i == 0 else ("a" if i == 1 else f"a^{i}")
        if r:
            s = "b" if i == 0 else s + "b"
        return s

    return CayleyGroup(table, [label(i, r) for r, i in zip(ref, rot)], identity=0)


def subgroup_generated(g: CayleyGroup, seeds) -> set[int]:
    seeds = [int(s) for s in seeds]
    if not seeds:
        raise InvalidInputError("need at least one seed")
    mask = np.zeros(g.size, dtype=bool)
    mask[g.identity] = True
    mask[seeds] = True
    mask[g.inverse[seeds]] = True
    while True:
        members = np.flatnonzero(mask)
        grown = mask.copy()
        grown[g.table[np.ix_(members, members)].ravel()] = True
        if grown.sum() == mask.sum():
            return set(members.tolist())
        mask = grown


def greedy_generators(g: CayleyGroup, cap: int = MAX_GENERATORS) -> list[int]:
    """Add the element with the largest closure gain until the group is reached.

    Ties go to the lowest index. Raises if more than ``cap`` are needed.
    """
    gens: list[int] = []
    current = {g.identity}
    while len(current) < g.size:
        if len(gens) == cap:
            raise UnsupportedError(f"no generating set of size <= {cap} found greedily")
        best, best_span = None, current
        tried: set[frozenset] = set()
        for x in range(g.size):
            if x in current:
                continue
            # elements with the same cyclic subgroup give the same span
            cyc = frozenset(subgroup_generated(g, [x]))
            if cyc in tried:
                continue
            tried.add(cyc)
            sp = subgroup_generated(g, gens + [x])
            if len(sp) > len(best_span):
                best, best_span = x, sp
        gens.append(best)
        current = best_span
    return gens


def _spanning_tree(g: CayleyGroup, gens: list[int]):
    """BFS layers over the right Cayley graph: each x = parent * gens[k]."""
    parent = np.full(g.size, -1, dtype=np.int64)
    via = np.full(g.size, -1, dtype=np.int64)
    seen = np.zeros(g.size, dtype=bool)
    seen[g.identity] = True
    layers = []
    frontier = [g.identity]
    while frontier:
        layer = []
        for x in frontier:
            for k, s in enumerate(gens):
                y = int(g.table[x, s])
                if not seen[y]:
                    seen[y] = True
                    parent[y], via[y] = x, k
                    layer.append(y)
        if layer:
            layers.append(np.array(layer, dtype=np.int64))
        frontier = layer
    return parent, via, layers


def brute_force_automorphisms(g: CayleyGroup) -> list[AutPermutation]:
    """All automorphisms of ``g``, sorted by image tuple."""
    if g.size > 4096:
        raise CapExceededError(f"group order {g.size} too large for brute force")
    if g.size == 1:
        return [AutPermutation((0,))]
    gens = greedy_generators(g)
    parent, via, layers = _spanning_tree(g, gens)
    gen_arr = np.array(gens, dtype=np.int64)
    edge_targets = g.table[:, gen_arr]
    candidates = [np.flatnonzero(g.orders == g.orders[s]).tolist() for s in gens]
    found = []
    for imgs in itertools.product(*candidates):
        imgs = np.array(imgs, dtype=np.int64)
        image = np.full(g.size, -1, dtype=np.int64)
        image[g.identity] = g.identity
        for layer in layers:
            image[layer] = g.table[image[parent[layer]], imgs[via[layer]]]
        # well-defined on every Cayley-graph edge => homomorphism
        if not np.array_equal(g.table[image[:, None], imgs[None, :]], image[edge_targets]):
            continue
        if len(np.unique(image)) != g.size:
            continue
        if not np.array_equal(g.table[image[:, None], image[None, :]], image[g.table]):
            continue
        found.append(AutPermutation(tuple(image.tolist())))
    return sorted(found)


def oracle_theta_spectrum(g: CayleyGroup, name: str = "G",
                          auts: list[AutPermutation] | None = None) -> Spectrum:
    if auts is None:
        auts = brute_force_automorphisms(g)
    return Spectrum.from_sizes(name, g.size, (f.fixed_count() for f in auts))

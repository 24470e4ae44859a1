"""Finite groups given by operation tables on {0, ..., n-1} with identity 0."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .canonical import canonical_labeling, isomorphism_from_labelings, refine_signatures
from .errors import NoIdentity, NoInverse, NotASubgroup, NotAssociative, NotClosed, NotNormalizing

ElementSet = frozenset
"""Subsets of a carrier.  Render with ``sorted`` for a canonical order."""


def elset(items: Iterable[int]) -> frozenset[int]:
    return frozenset(int(x) for x in items)


@dataclass(frozen=True)
class SeriesReport:
    """A computed series together with the class or length it witnesses."""

    kind: str
    terms: list[frozenset[int]]
    stabilized: bool
    class_or_length: int | None
    witness: list[tuple[frozenset[int], str]] | None = None
    notes: list[str] = field(default_factory=list)

    def as_lists(self) -> list[list[int]]:
        return [sorted(t) for t in self.terms]


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    exponent: int

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def full(self) -> frozenset[int]:
        return frozenset(range(self.order))

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x y x^-1 y^-1."""
        t = self.table
        return t[t[t[x][y]][self.inverse[x]]][self.inverse[y]]

    def power(self, a: int, k: int) -> int:
        r = 0
        for _ in range(k % self.element_orders[a]):
            r = self.table[r][a]
        return r

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.array == self.array.T).all())

    @cached_property
    def canonical(self) -> tuple[bytes, tuple[int, ...]]:
        sig = refine_signatures([self.table], list(self.element_orders))
        return canonical_labeling([self.table], sig)

    @property
    def canonical_key(self) -> bytes:
        return self.canonical[0]


# construction ----------------------------------------------------------------

def build_group(order: int, table: Sequence[Sequence[int]], check: bool = True) -> FiniteGroup:
    """Validate an operation table and return the group it defines."""
    n = int(order)
    if n < 1:
        raise NotClosed("order must be positive")
    arr = np.asarray(table, dtype=np.int64)
    if arr.shape != (n, n):
        raise NotClosed(f"table shape {arr.shape} does not match order {n}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise NotClosed("table entry out of range")
    ident = np.arange(n)
    if not ((arr[0] == ident).all() and (arr[:, 0] == ident).all()):
        raise NoIdentity("element 0 is not a two-sided identity")
    inverse = []
    for a in range(n):
        hits = np.nonzero(arr[a] == 0)[0]
        if len(hits) != 1 or arr[hits[0], a] != 0:
            raise NoInverse(a)
        inverse.append(int(hits[0]))
    if check:
        # (ab)c == a(bc) for all triples, one slab of a at a time
        for a in range(n):
            left = arr[arr[a]]          # left[b, c] = (a b) c
            right = arr[a][arr]         # right[b, c] = a (b c)
            bad = np.argwhere(left != right)
            if len(bad):
                b, c = (int(v) for v in bad[0])
                raise NotAssociative((a, b, c))
        if not all(len(set(row)) == n for row in arr.tolist()):
            raise NoInverse(int(next(a for a in range(n) if len(set(arr[a].tolist())) != n)))
    tab = tuple(tuple(int(v) for v in row) for row in arr.tolist())
    g = FiniteGroup(n, tab, tuple(inverse), 1)
    exponent = math.lcm(*g.element_orders) if n > 1 else 1
    out = FiniteGroup(n, tab, tuple(inverse), exponent)
    out.__dict__["element_orders"] = g.element_orders
    out.__dict__["array"] = arr
    return out


def cyclic_group(n: int) -> FiniteGroup:
    return build_group(n, [[(a + b) % n for b in range(n)] for a in range(n)], check=False)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Row-major encoding: (g, h) has index g * |H| + h."""
    m = H.order
    n = G.order * m
    tab = [[G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(n)] for a in range(n)]
    return build_group(n, tab, check=False)


def abelian_group(*factors: int) -> FiniteGroup:
    G = cyclic_group(1)
    for f in factors:
        G = direct_product(G, cyclic_group(f))
    return G


def group_from_permutations(perms: Sequence[Sequence[int]]) -> FiniteGroup:
    """Group of permutations, closed under composition p(q(x)); sorted with identity first."""
    gens = [tuple(p) for p in perms]
    k = len(gens[0]) if gens else 1
    ident = tuple(range(k))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[x]] for x in range(k))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    elems = sorted(seen)
    index = {p: i for i, p in enumerate(elems)}
    tab = [[index[tuple(p[q[x]] for x in range(k))] for q in elems] for p in elems]
    return build_group(len(elems), tab, check=False)


def symmetric_group(k: int) -> FiniteGroup:
    return group_from_permutations(list(itertools.permutations(range(k))))


def dihedral_group(m: int) -> FiniteGroup:
    """Symmetries of the m-gon, order 2m."""
    rot = [(x + 1) % m for x in range(m)]
    ref = [(-x) % m for x in range(m)]
    return group_from_permutations([rot, ref])


def quaternion_group() -> FiniteGroup:
    # elements are signed units +-1, +-i, +-j, +-k
    units = ["1", "i", "j", "k"]
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for s in (1, -1) for u in units]
    index = {e: i for i, e in enumerate(elems)}
    tab = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = mult[(u1, u2)]
            row.append(index[(s * s1 * s2, u)])
        tab.append(row)
    return build_group(8, tab)


def relabel_group(G: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    """Transport G along the bijection ``perm`` (perm[0] must be 0)."""
    n = G.order
    inv = [0] * n
    for a, b in enumerate(perm):
        inv[b] = a
    tab = [[perm[G.table[inv[x]][inv[y]]] for y in range(n)] for x in range(n)]
    return build_group(n, tab, check=False)


# subgroups -------------------------------------------------------------------

def generated_subgroup(G: FiniteGroup, seed: Iterable[int]) -> frozenset[int]:
    """Least subgroup containing ``seed``."""
    gens = sorted(set(seed) - {0})
    elems = {0}
    frontier = [0]
    t = G.table
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def is_subgroup(G: FiniteGroup, S: Iterable[int]) -> bool:
    S = set(S)
    if 0 not in S:
        return False
    t = G.table
    return all(t[a][b] in S for a in S for b in S)


def normalizes(G: FiniteGroup, g: int, H: frozenset[int]) -> bool:
    return all(G.conj(g, h) in H for h in H)


def normalizer(G: FiniteGroup, H: frozenset[int]) -> frozenset[int]:
    return frozenset(g for g in G.elements if normalizes(G, g, H))


def is_normal(G: FiniteGroup, H: frozenset[int], within: Iterable[int] | None = None) -> bool:
    pool = G.elements if within is None else within
    return all(normalizes(G, g, H) for g in pool)


def normal_closure(G: FiniteGroup, S: Iterable[int], within: Iterable[int] | None = None) -> frozenset[int]:
    """Least subgroup containing S and normalized by ``within`` (default all of G)."""
    pool = list(G.elements if within is None else within)
    cur = generated_subgroup(G, S)
    while True:
        nxt = generated_subgroup(G, {G.conj(g, h) for g in pool for h in cur})
        if nxt == cur:
            return cur
        cur = nxt


def commutator_subgroup(G: FiniteGroup, X: Iterable[int], Y: Iterable[int]) -> frozenset[int]:
    """Subgroup generated by all [x, y] with x in X, y in Y."""
    Y = list(Y)
    return generated_subgroup(G, {G.commutator(x, y) for x in X for y in Y})


def center(G: FiniteGroup) -> frozenset[int]:
    t = G.table
    return frozenset(a for a in G.elements if all(t[a][b] == t[b][a] for b in G.elements))


def relative_centralizer(G: FiniteGroup, X: Iterable[int], H: Iterable[int]) -> frozenset[int]:
    """C_G(X/H): elements of N_G(H) whose commutator with every x in X lies in H."""
    H = frozenset(H)
    X = list(X)
    if not is_subgroup(G, H):
        raise NotASubgroup("H is not a subgroup")
    for x in X:
        if not normalizes(G, x, H):
            raise NotNormalizing(x)
    return frozenset(
        g for g in G.elements
        if normalizes(G, g, H) and all(G.commutator(g, x) in H for x in X)
    )


def cosets_representatives(G: FiniteGroup, N: frozenset[int]) -> tuple[list[int], list[int]]:
    """Least element of each left coset gN, and the projection element -> coset index."""
    n = G.order
    proj = [-1] * n
    reps = []
    for g in range(n):
        if proj[g] >= 0:
            continue
        idx = len(reps)
        reps.append(g)
        for h in N:
            proj[G.table[g][h]] = idx
    return reps, proj


def quotient_group(G: FiniteGroup, N: frozenset[int]) -> tuple[FiniteGroup, list[int]]:
    """G/N for a normal subgroup N, on least coset representatives."""
    if not is_subgroup(G, N):
        raise NotASubgroup("N is not a subgroup")
    if not is_normal(G, N):
        raise NotNormalizing(next(g for g in G.elements if not normalizes(G, g, N)))
    reps, proj = cosets_representatives(G, N)
    tab = [[proj[G.table[a][b]] for b in reps] for a in reps]
    return build_group(len(reps), tab, check=False), proj


def subgroup_as_group(G: FiniteGroup, S: Iterable[int]) -> tuple[FiniteGroup, list[int]]:
    """The subgroup S as a standalone group; ``labels[i]`` is the element of G with new index i."""
    labels = sorted(S)
    index = {x: i for i, x in enumerate(labels)}
    tab = [[index[G.table[a][b]] for b in labels] for a in labels]
    return build_group(len(labels), tab, check=False), labels


def subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    """All subgroups, by adding one generator at a time."""
    found = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        nxt = []
        for H in frontier:
            for g in G.elements:
                if g in H:
                    continue
                K = generated_subgroup(G, H | {g})
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


# series ----------------------------------------------------------------------

def group_series(G: FiniteGroup, kind: str) -> SeriesReport:
    """Lower central, upper central or derived series, computed until stabilization."""
    trivial = frozenset({0})
    if kind == "lower-central":
        terms = [G.full]
        target = trivial
        step = lambda T: commutator_subgroup(G, T, G.elements)
    elif kind == "derived":
        terms = [G.full]
        target = trivial
        step = lambda T: commutator_subgroup(G, T, T)
    elif kind == "upper-central":
        terms = [trivial]
        target = G.full
        step = lambda T: relative_centralizer(G, G.elements, T)
    else:
        raise ValueError(f"unknown series kind {kind!r}")
    while terms[-1] != target:
        nxt = step(terms[-1])
        terms.append(nxt)
        if nxt == terms[-2]:
            break
    reached = terms[-1] == target
    stabilized = len(terms) >= 2 and terms[-1] == terms[-2]
    return SeriesReport(kind, terms, stabilized, terms.index(target) if reached else None)


def nilpotency_solubility(G: FiniteGroup) -> tuple[int | None, int | None]:
    return (group_series(G, "lower-central").class_or_length,
            group_series(G, "derived").class_or_length)


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_pi_number(k: int, pi: Iterable[int]) -> bool:
    pi = set(pi)
    return all(p in pi for p in prime_factors(k))


def is_pi_prime_number(k: int, pi: Iterable[int]) -> bool:
    pi = set(pi)
    return not any(p in pi for p in prime_factors(k))


def pi_decomposition(G: FiniteGroup, pi: Iterable[int]) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """(π-elements, π'-elements, largest normal π'-subgroup)."""
    pi = set(pi)
    orders = G.element_orders
    pe = frozenset(a for a in G.elements if is_pi_number(orders[a], pi))
    ppe = frozenset(a for a in G.elements if is_pi_prime_number(orders[a], pi))
    core: frozenset[int] = frozenset({0})
    for a in sorted(ppe):
        if a in core:
            continue
        N = normal_closure(G, {a})
        if is_pi_prime_number(len(N), pi):
            core = normal_closure(G, core | N)
    return pe, ppe, core


# homomorphisms ---------------------------------------------------------------

def generating_sequence(G: FiniteGroup) -> list[int]:
    """A short generating sequence, preferring elements of large order."""
    gens: list[int] = []
    H = frozenset({0})
    by_order = sorted(G.elements, key=lambda a: (-G.element_orders[a], a))
    while len(H) < G.order:
        best = None
        for a in by_order:
            if a in H:
                continue
            K = generated_subgroup(G, H | {a})
            if best is None or len(K) > len(best[1]):
                best = (a, K)
        gens.append(best[0])
        H = best[1]
    return gens


def _extend_hom(G: FiniteGroup, H: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> list[int] | None:
    """Extend gens -> images to a homomorphism on <gens>; None if inconsistent.

    Returned list has -1 outside the generated subgroup.
    """
    phi = [-1] * G.order
    phi[0] = 0
    frontier = [0]
    tg, th = G.table, H.table
    while frontier:
        nxt = []
        for x in frontier:
            px = phi[x]
            for g, h in zip(gens, images):
                y = tg[x][g]
                v = th[px][h]
                if phi[y] < 0:
                    phi[y] = v
                    nxt.append(y)
                elif phi[y] != v:
                    return None
        frontier = nxt
    return phi


def _hom_search(G: FiniteGroup, H: FiniteGroup, injective: bool, first_only: bool) -> list[tuple[int, ...]]:
    if G.order != H.order and injective:
        return []
    gens = generating_sequence(G)
    go, ho = G.element_orders, H.element_orders
    cands = [[h for h in H.elements if ho[h] == go[g]] for g in gens]
    out: list[tuple[int, ...]] = []

    def rec(k: int, images: list[int]) -> bool:
        phi = _extend_hom(G, H, gens[:k], images)
        if phi is None:
            return False
        if injective:
            vals = [v for v in phi if v >= 0]
            if len(set(vals)) != len(vals):
                return False
        if k == len(gens):
            out.append(tuple(phi))
            return first_only
        for h in cands[k]:
            if rec(k + 1, images + [h]):
                return True
        return False

    rec(0, [])
    return out


def automorphism_group(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms as permutation words, in lexicographic order."""
    return sorted(_hom_search(G, G, injective=True, first_only=False))


def find_group_isomorphism(G: FiniteGroup, H: FiniteGroup) -> tuple[int, ...] | None:
    if G.order != H.order or sorted(G.element_orders) != sorted(H.element_orders):
        return None
    found = _hom_search(G, H, injective=True, first_only=True)
    return found[0] if found else None


def group_isomorphism(G: FiniteGroup, H: FiniteGroup) -> tuple[int, ...] | None:
    """Isomorphism via canonical labelings (exact)."""
    if G.order != H.order:
        return None
    if G.table == H.table:
        return tuple(range(G.order))
    k1, l1 = G.canonical
    k2, l2 = H.canonical
    if k1 != k2:
        return None
    return isomorphism_from_labelings(l1, l2)


def holomorph(G: FiniteGroup, check: bool | None = None) -> tuple[FiniteGroup, list[tuple[int, int]], list[tuple[int, ...]]]:
    """Hol(G) = G x| Aut(G) with (a, f)(b, g) = (a f(b), f g).

    Index of (a, f) is a * |Aut| + f.  Returns the group, the decode table and
    the automorphism list.
    """
    auts = automorphism_group(G)
    m = len(auts)
    n = G.order
    aut_index = {f: i for i, f in enumerate(auts)}
    A = np.asarray(auts, dtype=np.int64)                      # A[f, x] = f(x)
    comp = np.array([[aut_index[tuple(A[f][A[g]].tolist())] for g in range(m)] for f in range(m)])
    mulA = G.array
    # first coordinate: a * f(b), indexed [a, f, b]
    first = mulA[np.arange(n)[:, None, None], A[None, :, :]]
    tab = first[:, :, :, None] * m + comp[None, :, None, :]   # [a, f, b, g]
    N = n * m
    tab = tab.reshape(N, N)
    decode = [(i // m, i % m) for i in range(N)]
    if check is None:
        check = N <= 200
    return build_group(N, tab, check=check), decode, auts

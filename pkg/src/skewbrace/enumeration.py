"""Groups and skew braces of small order, up to isomorphism.

Braces with additive group A correspond to regular subgroups of
Hol(A) = A x| Aut(A): the element of such a subgroup sending 0 to a is
x -> a + lam_a(x), so a regular subgroup is the same thing as a map
a -> lam_a in Aut(A) with lam_0 = id and lam_{a + lam_a(b)} = lam_a lam_b.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

from .brace import SkewBrace, build_brace
from .catalog import Catalog, CatalogEntry
from .errors import OrderTooLarge
from .groups import (
    FiniteGroup,
    abelian_group,
    automorphism_group,
    build_group,
    center,
    commutator_subgroup,
    cyclic_group,
    dihedral_group,
    find_group_isomorphism,
    prime_factors,
    group_from_permutations,
    quaternion_group,
)

GROUP_LIMIT = 16
BRUTE_GROUP_LIMIT = 6
DEFAULT_BRACE_CAP = 8
ORACLE_LIMIT = 8


def brace_cap() -> int:
    raw = os.environ.get("SKB_MAX_ORDER")
    if raw is None:
        return DEFAULT_BRACE_CAP
    try:
        return min(int(raw), GROUP_LIMIT)
    except ValueError:
        return DEFAULT_BRACE_CAP


# groups ----------------------------------------------------------------------

def _cyclic_extensions(H: FiniteGroup, p: int) -> list[FiniteGroup]:
    """Groups G with a normal subgroup H of prime index p and G/H cyclic.

    G is generated by H and g with g h g^-1 = phi(h) and g^p = t, which is a
    group exactly when phi(t) = t and phi^p is conjugation by t.  The element
    h g^i gets index i * |H| + h.
    """
    m = H.order
    n = m * p
    T = H.array
    inv = np.asarray(H.inverse)
    out = []
    for phi in automorphism_group(H):
        f = np.asarray(phi)
        powers = [np.arange(m)]
        for _ in range(p):
            powers.append(f[powers[-1]])
        fp = powers[p]
        for t in range(m):
            if phi[t] != t:
                continue
            conj_t = T[T[t], inv[t]]                      # x -> t x t^-1
            if not (fp == conj_t).all():
                continue
            h1 = np.arange(n)[:, None] % m
            i1 = np.arange(n)[:, None] // m
            h2 = np.arange(n)[None, :] % m
            i2 = np.arange(n)[None, :] // m
            moved = np.stack(powers[:p])[i1, h2]          # phi^i1(h2)
            prod = T[h1, moved]
            s = i1 + i2
            wrap = s >= p
            prod = np.where(wrap, T[prod, t], prod)
            tab = np.where(wrap, s - p, s) * m + prod
            out.append(build_group(n, tab, check=n <= 12))
    return out


def _group_invariant(G: FiniteGroup) -> tuple:
    orders = G.element_orders
    Z = center(G)
    D = commutator_subgroup(G, G.full, G.full)
    cent = sorted(
        (orders[x], sum(1 for y in G.elements if G.table[x][y] == G.table[y][x]))
        for x in G.elements
    )
    return (G.is_abelian, len(Z), len(D), tuple(cent))


def _dedupe_groups(groups: list[FiniteGroup]) -> list[FiniteGroup]:
    buckets: dict[tuple, list[FiniteGroup]] = {}
    for G in groups:
        bucket = buckets.setdefault(_group_invariant(G), [])
        if not any(find_group_isomorphism(G, K) is not None for K in bucket):
            bucket.append(G)
    reps = [G for bucket in buckets.values() for G in bucket]
    return sorted(reps, key=lambda G: G.canonical_key)


@lru_cache(maxsize=None)
def _groups_of_order(n: int) -> tuple[FiniteGroup, ...]:
    if n == 1:
        return (cyclic_group(1),)
    found: list[FiniteGroup] = []
    for p in prime_factors(n):
        for H in _groups_of_order(n // p):
            found.extend(_cyclic_extensions(H, p))
    return tuple(_dedupe_groups(found))


def groups_of_order(n: int) -> list[FiniteGroup]:
    """All groups of order n up to isomorphism, sorted by canonical key.

    Every group of order at most 16 is soluble, so it has a normal subgroup of
    prime index and arises as a cyclic extension of a smaller group.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > GROUP_LIMIT:
        raise OrderTooLarge(f"groups are enumerated up to order {GROUP_LIMIT}, got {n}")
    return list(_groups_of_order(n))


@lru_cache(maxsize=None)
def _groups_brute(n: int) -> tuple[FiniteGroup, ...]:
    # reduced Latin squares (row and column 0 are the identity), then associativity
    tab = [[(a if b == 0 else b if a == 0 else -1) for b in range(n)] for a in range(n)]
    rows = [set(range(n)) - {a} for a in range(n)]
    cols = [set(range(n)) - {b} for b in range(n)]
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]
    found: dict[bytes, FiniteGroup] = {}

    def rec(k: int) -> None:
        if k == len(cells):
            arr = np.asarray(tab)
            if _assoc(arr):
                G = build_group(n, tab, check=False)
                found.setdefault(G.canonical_key, G)
            return
        a, b = cells[k]
        for v in sorted(rows[a] & cols[b]):
            tab[a][b] = v
            rows[a].discard(v)
            cols[b].discard(v)
            rec(k + 1)
            rows[a].add(v)
            cols[b].add(v)
        tab[a][b] = -1

    rec(0)
    return tuple(found[k] for k in sorted(found))


def _assoc(arr: np.ndarray) -> bool:
    # (ab)c == a(bc): arr[arr[a, b], c] vs arr[a, arr[b, c]]
    return bool((arr[arr] == arr[:, arr]).all())


def groups_of_order_brute(n: int) -> list[FiniteGroup]:
    """Groups of order n by exhaustive search over operation tables."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > BRUTE_GROUP_LIMIT:
        raise OrderTooLarge(f"table search is limited to order {BRUTE_GROUP_LIMIT}, got {n}")
    return list(_groups_brute(n))


def _oracle_groups(n: int) -> list[FiniteGroup]:
    return groups_of_order_brute(n) if n <= BRUTE_GROUP_LIMIT else groups_of_order(n)


@lru_cache(maxsize=None)
def _named_groups() -> dict[bytes, str]:
    names: dict[bytes, str] = {}
    for n in range(1, GROUP_LIMIT + 1):
        for factors in _abelian_types(n):
            inv = _invariant_factors(factors)
            label = "x".join(f"Z{f}" for f in inv) if inv else "1"
            names.setdefault(abelian_group(*factors).canonical_key, label)
    for m in range(3, 9):
        names.setdefault(dihedral_group(m).canonical_key, "S3" if m == 3 else f"D{m}")
    names.setdefault(quaternion_group().canonical_key, "Q8")
    names.setdefault(group_from_permutations([(1, 2, 0, 3), (1, 0, 3, 2)]).canonical_key, "A4")
    names.setdefault(_dicyclic12().canonical_key, "Dic3")
    return names


def _dicyclic12() -> FiniteGroup:
    # a^i x^j with a^6 = 1, x^2 = a^3, x a x^-1 = a^-1; index 6j + i
    def mul(i1: int, j1: int, i2: int, j2: int) -> int:
        i = (i1 + (-i2 if j1 else i2)) % 6
        j = j1 + j2
        if j == 2:
            i, j = (i + 3) % 6, 0
        return 6 * j + i

    return build_group(12, [[mul(x % 6, x // 6, y % 6, y // 6) for y in range(12)] for x in range(12)])


def _abelian_types(n: int) -> list[tuple[int, ...]]:
    """Elementary-divisor tuples of abelian groups of order n."""
    if n == 1:
        return [()]
    per_prime = []
    for p in prime_factors(n):
        e = 0
        k = n
        while k % p == 0:
            k //= p
            e += 1
        per_prime.append([tuple(p ** part for part in lam) for lam in _partitions(e)])
    return [tuple(x for block in combo for x in block) for combo in itertools.product(*per_prime)]


def _invariant_factors(factors: tuple[int, ...]) -> list[int]:
    """Elementary divisors -> invariant factors d_1 | d_2 | ... (ascending)."""
    by_prime: dict[int, list[int]] = {}
    for q in factors:
        by_prime.setdefault(prime_factors(q)[0], []).append(q)
    columns = [sorted(v, reverse=True) for v in by_prime.values()]
    width = max((len(c) for c in columns), default=0)
    out = []
    for i in range(width):
        d = 1
        for c in columns:
            d *= c[i] if i < len(c) else 1
        out.append(d)
    return sorted(out)


def _partitions(e: int, largest: int | None = None) -> list[tuple[int, ...]]:
    if e == 0:
        return [()]
    largest = e if largest is None else largest
    out = []
    for first in range(min(e, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(e - first, first))
    return out


def group_name(G: FiniteGroup) -> str:
    """Conventional name when known, else "G<order>#<position in groups_of_order>"."""
    name = _named_groups().get(G.canonical_key)
    if name is not None:
        return name
    if G.order <= GROUP_LIMIT:
        for i, H in enumerate(groups_of_order(G.order)):
            if H.canonical_key == G.canonical_key:
                return f"G{G.order}#{i + 1}"
    return f"G{G.order}"


# braces ----------------------------------------------------------------------

class _AutTable:
    """Automorphisms of A indexed by position, with cached composition."""

    def __init__(self, A: FiniteGroup):
        self.perms = automorphism_group(A)
        self.index = {f: i for i, f in enumerate(self.perms)}
        self.identity = self.index[tuple(range(A.order))]
        self._comp: dict[tuple[int, int], int] = {}

    def compose(self, f: int, g: int) -> int:
        key = (f, g)
        r = self._comp.get(key)
        if r is None:
            pf, pg = self.perms[f], self.perms[g]
            r = self.index[tuple(pf[x] for x in pg)]
            self._comp[key] = r
        return r

    def inverse(self, f: int) -> int:
        pf = self.perms[f]
        inv = [0] * len(pf)
        for x, y in enumerate(pf):
            inv[y] = x
        return self.index[tuple(inv)]


def _semiregular_candidates(A: FiniteGroup, auts: _AutTable, a: int) -> list[int]:
    """Automorphisms f such that <(a, f)> acts semiregularly on A."""
    out = []
    for f in range(len(auts.perms)):
        pf = auts.perms[f]
        point, F = a, f
        ok = True
        while not (point == 0 and F == auts.identity):
            if point == 0:
                ok = False
                break
            point = A.table[a][pf[point]]
            F = auts.compose(f, F)
        if ok:
            out.append(f)
    return out


def _regular_subgroups(A: FiniteGroup, auts: _AutTable) -> list[tuple[int, ...]]:
    """All maps a -> lam_a (as automorphism indices) coming from regular subgroups."""
    n = A.order
    add = A.table
    perms = auts.perms
    cands = [_semiregular_candidates(A, auts, a) for a in range(n)]
    results: list[tuple[int, ...]] = []

    def close(assign: list[int], start: int) -> bool:
        members = [x for x in range(n) if assign[x] >= 0 and x != start]
        queue = [start]
        members.append(start)
        while queue:
            x = queue.pop()
            for y in list(members):
                for u, v in ((x, y), (y, x)):
                    p = add[u][perms[assign[u]][v]]
                    F = auts.compose(assign[u], assign[v])
                    if assign[p] < 0:
                        assign[p] = F
                        members.append(p)
                        queue.append(p)
                    elif assign[p] != F:
                        return False
        return True

    def rec(assign: list[int]) -> None:
        try:
            a = assign.index(-1)
        except ValueError:
            results.append(tuple(assign))
            return
        for f in cands[a]:
            trial = list(assign)
            trial[a] = f
            if close(trial, a):
                rec(trial)

    start = [-1] * n
    start[0] = auts.identity
    rec(start)
    return results


def _mul_table(A: FiniteGroup, auts: _AutTable, lam: tuple[int, ...]) -> list[list[int]]:
    return [[A.table[a][auts.perms[lam[a]][b]] for b in range(A.order)] for a in range(A.order)]


def braces_with_additive(A: FiniteGroup) -> list[SkewBrace]:
    """One brace per isomorphism class with additive group A, sorted by canonical key.

    Two regular subgroups give isomorphic braces exactly when they are
    conjugate under Aut(A), so each Aut(A)-orbit of lambda maps is built once.
    """
    auts = _AutTable(A)
    conj_cache: dict[int, tuple[tuple[int, ...], int]] = {}
    seen: set[tuple[int, ...]] = set()
    out: dict[bytes, SkewBrace] = {}
    for lam in _regular_subgroups(A, auts):
        if lam in seen:
            continue
        for phi in range(len(auts.perms)):
            if phi not in conj_cache:
                conj_cache[phi] = (auts.perms[phi], auts.inverse(phi))
            pphi, phinv = conj_cache[phi]
            moved = [0] * A.order
            for a, f in enumerate(lam):
                moved[pphi[a]] = auts.compose(auts.compose(phi, f), phinv)
            seen.add(tuple(moved))
        mul = build_group(A.order, _mul_table(A, auts, lam), check=A.order <= 8)
        B = build_brace(A, mul)
        out.setdefault(B.canonical_key, B)
    return [out[k] for k in sorted(out)]


def _make_catalog(n: int, braces: list[SkewBrace]) -> Catalog:
    by_key: dict[bytes, SkewBrace] = {}
    for B in braces:
        by_key.setdefault(B.canonical_key, B)
    entries = []
    for i, key in enumerate(sorted(by_key)):
        B = by_key[key]
        meta = {"additive": group_name(B.add), "multiplicative": group_name(B.mul)}
        entries.append(CatalogEntry(f"B{n}_{i + 1}", B, meta))
    return Catalog(entries)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> Catalog:
    braces: list[SkewBrace] = []
    for A in groups_of_order(n):
        braces.extend(braces_with_additive(A))
    return _make_catalog(n, braces)


def enumerate_braces(n: int) -> Catalog:
    """All skew braces of order n up to isomorphism, ordered by canonical key."""
    if n < 1:
        raise ValueError("order must be positive")
    cap = brace_cap()
    if n > cap:
        raise OrderTooLarge(f"enumeration cap is {cap} (set SKB_MAX_ORDER to raise it), got {n}")
    cat = _enumerate(n)
    return Catalog(list(cat.entries))


# oracle ----------------------------------------------------------------------

def _transported_tables(M: FiniteGroup, perms: np.ndarray) -> np.ndarray:
    """mul[k, a, b] = psi_k^-1(psi_k(a) psi_k(b)) for each bijection psi_k."""
    k, n = perms.shape
    inv = np.argsort(perms, axis=1)
    prod = M.array[perms[:, :, None], perms[:, None, :]]
    return inv[np.arange(k)[:, None, None], prod]


def _distributive_mask(A: FiniteGroup, muls: np.ndarray) -> np.ndarray:
    """mask[k] is True when a o (b + c) = a o b - a + a o c for all a, b, c."""
    n = A.order
    add = A.array
    neg = np.asarray(A.inverse)
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    lhs = muls[:, a, add[b, c]]
    ab = muls[:, a, b]
    ac = muls[:, a, c]
    rhs = add[add[ab, neg[a]], ac]
    return (lhs == rhs).reshape(len(muls), -1).all(axis=1)


def brute_force_oracle(n: int) -> Catalog:
    """Every (A, psi^-1 M psi) pair over all bijections psi fixing 0, filtered and deduplicated."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > ORACLE_LIMIT:
        raise OrderTooLarge(f"the brute-force oracle is limited to order {ORACLE_LIMIT}, got {n}")
    groups = _oracle_groups(n)
    perms = np.array([(0,) + p for p in itertools.permutations(range(1, n))], dtype=np.int64)
    chunk = max(1, 200_000 // max(1, n ** 3))
    braces: list[SkewBrace] = []
    for A in groups:
        tables: set[bytes] = set()
        for M in groups:
            for lo in range(0, len(perms), chunk):
                muls = _transported_tables(M, perms[lo:lo + chunk])
                for tab in muls[_distributive_mask(A, muls)]:
                    tables.add(tab.astype(np.uint8).tobytes())
        # orbits under Aut(A) relabelings are isomorphic; keep one table per orbit
        autos = [np.asarray(f) for f in automorphism_group(A)]
        done: set[bytes] = set()
        for raw in sorted(tables):
            if raw in done:
                continue
            tab = np.frombuffer(raw, dtype=np.uint8).astype(np.int64).reshape(n, n)
            for f in autos:
                finv = np.argsort(f)
                done.add(f[tab[finv][:, finv]].astype(np.uint8).tobytes())
            braces.append(build_brace(A, build_group(n, tab, check=False)))
    return _make_catalog(n, braces)

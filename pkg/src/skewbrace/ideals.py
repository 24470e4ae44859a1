"""Sub-braces, the four ideal notions, fixators, minimal ideals and radicals."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .brace import SkewBrace, is_subbrace, quotient_brace
from .errors import BraceError, NotContainingZero, PreconditionViolated
from .groups import SeriesReport, automorphism_group, generated_subgroup, is_subgroup, normalizes, subgroups

KINDS = ("subbrace", "left-ideal", "strong-left-ideal", "ideal")


def memo(B: SkewBrace, key, compute: Callable):
    """Per-brace cache stored on the (frozen, eq=False) instance."""
    store = B.__dict__.setdefault("_memo", {})
    if key not in store:
        store[key] = compute()
    return store[key]


@dataclass(frozen=True)
class IdealFlags:
    subbrace: bool
    left_ideal: bool
    strong_left_ideal: bool
    ideal: bool
    subideal_defect: int | None


@dataclass(frozen=True)
class MinimalIdealData:
    b_s: frozenset[int]
    b_u: frozenset[int]
    b_v: frozenset[int]
    s: frozenset[int]
    u: frozenset[int]
    v: frozenset[int]
    minimal_ideals: list[frozenset[int]]
    direct_sum_witness: list[frozenset[int]]


# elementary tests ------------------------------------------------------------

def add_closure(B: SkewBrace, X: Iterable[int]) -> frozenset[int]:
    """<X>_+."""
    return generated_subgroup(B.add, X)


def star_set(B: SkewBrace, X: Iterable[int], Y: Iterable[int]) -> frozenset[int]:
    """{x * y : x in X, y in Y} (no closure)."""
    Y = list(Y)
    return frozenset(B.star[x][y] for x in X for y in Y)


def star_product(B: SkewBrace, X: Iterable[int], Y: Iterable[int]) -> frozenset[int]:
    """<X * Y>_+."""
    return add_closure(B, star_set(B, X, Y))


def set_sum(B: SkewBrace, I: Iterable[int], J: Iterable[int]) -> frozenset[int]:
    J = list(J)
    return frozenset(B.plus(a, b) for a in I for b in J)


def set_circ(B: SkewBrace, I: Iterable[int], J: Iterable[int]) -> frozenset[int]:
    J = list(J)
    return frozenset(B.circ(a, b) for a in I for b in J)


def is_lambda_invariant(B: SkewBrace, S: frozenset[int], by: Iterable[int] | None = None) -> bool:
    pool = range(B.order) if by is None else by
    return all(B.lam[b][x] in S for b in pool for x in S)


def is_left_ideal(B: SkewBrace, S: frozenset[int]) -> bool:
    return is_subgroup(B.add, S) and is_lambda_invariant(B, S)


def is_strong_left_ideal(B: SkewBrace, S: frozenset[int]) -> bool:
    return is_left_ideal(B, S) and all(normalizes(B.add, g, S) for g in range(B.order))


def is_ideal(B: SkewBrace, S: frozenset[int]) -> bool:
    return is_strong_left_ideal(B, S) and all(normalizes(B.mul, g, S) for g in range(B.order))


def is_ideal_in(B: SkewBrace, I: frozenset[int], J: frozenset[int], kind: str = "ideal") -> bool:
    """Whether I is an ideal (or weaker kind) of the sub-brace J, computed inside B."""
    if not I <= J or not is_subbrace(B, I):
        return False
    if kind == "subbrace":
        return True
    if not is_lambda_invariant(B, I, J):
        return False
    if kind == "left-ideal":
        return True
    if not all(normalizes(B.add, g, I) for g in J):
        return False
    if kind == "strong-left-ideal":
        return True
    return all(normalizes(B.mul, g, I) for g in J)


def is_trivial_on(B: SkewBrace, S: Iterable[int]) -> bool:
    S = list(S)
    return all(B.plus(a, b) == B.circ(a, b) for a in S for b in S)


def trivial_quotient(B: SkewBrace, I: frozenset[int], J: frozenset[int]) -> bool:
    """J/I is a trivial brace: J * J lies in I."""
    return all(B.star[a][b] in I for a in J for b in J)


# subgroup and ideal lattices -------------------------------------------------

def additive_subgroups(B: SkewBrace) -> list[frozenset[int]]:
    return memo(B, "add-subgroups", lambda: subgroups(B.add))


def multiplicative_subgroups(B: SkewBrace) -> list[frozenset[int]]:
    return memo(B, "mul-subgroups", lambda: subgroups(B.mul))


def _check(kind: str) -> Callable[[SkewBrace, frozenset[int]], bool]:
    return {
        "subbrace": is_subbrace,
        "left-ideal": is_left_ideal,
        "strong-left-ideal": is_strong_left_ideal,
        "ideal": is_ideal,
    }[kind]


def all_ideals(B: SkewBrace, kind: str = "ideal") -> list[frozenset[int]]:
    """Every sub-brace / left ideal / strong left ideal / ideal, by size then members."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")

    def compute() -> list[frozenset[int]]:
        test = _check(kind)
        out = [S for S in additive_subgroups(B) if test(B, S)]
        # sums of left ideals need not be subgroups unless one summand is normal
        if kind in ("strong-left-ideal", "ideal") or (kind == "left-ideal" and B.add.is_abelian):
            members = set(out)
            for I, J in itertools.combinations(out, 2):
                if set_sum(B, I, J) not in members:
                    raise BraceError(f"sum of two {kind}s is not a {kind}")
        return out

    return memo(B, ("all", kind), compute)


def generated(B: SkewBrace, X: Iterable[int], kind: str) -> frozenset[int]:
    """Least sub-brace / left ideal / strong left ideal / ideal containing X."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    n = B.order
    cur = add_closure(B, X)
    while True:
        extra: set[int] = set()
        if kind == "subbrace":
            extra.update(B.circ(a, b) for a in cur for b in cur)
        else:
            extra.update(B.lam[c][x] for c in range(n) for x in cur)
            if kind in ("strong-left-ideal", "ideal"):
                extra.update(B.add.conj(g, x) for g in range(n) for x in cur)
            if kind == "ideal":
                extra.update(B.mul.conj(g, x) for g in range(n) for x in cur)
        if extra <= cur:
            return cur
        cur = add_closure(B, cur | extra)


def principal_ideal(B: SkewBrace, b: int) -> frozenset[int]:
    return memo(B, ("principal", b), lambda: generated(B, {b}, "ideal"))


def subideal_defect(B: SkewBrace, S: frozenset[int]) -> int | None:
    """Least k with a chain B = I_0 > ... > I_k = S, each an ideal in its predecessor."""
    S = frozenset(S)
    if not is_subbrace(B, S):
        return None
    if S == B.full:
        return 0
    above = [T for T in all_ideals(B, "subbrace") if S <= T]
    frontier = {B.full}
    seen = {B.full}
    for depth in range(1, B.order + 1):
        nxt = set()
        for J in frontier:
            for I in above:
                if I in seen or len(I) >= len(J):
                    continue
                if is_ideal_in(B, I, J):
                    nxt.add(I)
        if S in nxt:
            return depth
        if not nxt:
            return None
        seen |= nxt
        frontier = nxt
    return None


def classify_subset(B: SkewBrace, S: Iterable[int]) -> IdealFlags:
    S = frozenset(S)
    if 0 not in S:
        raise NotContainingZero("subset does not contain 0")
    sub = is_subbrace(B, S)
    left = is_left_ideal(B, S)
    strong = left and is_strong_left_ideal(B, S)
    ideal = strong and is_ideal(B, S)
    return IdealFlags(sub, left, strong, ideal, subideal_defect(B, S))


def weak_derived_terms(B: SkewBrace, C: frozenset[int]) -> list[frozenset[int]]:
    """C_(1) = C, C_(n+1) = <C_(n) * C_(n)>_+ until it repeats."""
    terms = [frozenset(C)]
    while True:
        T = terms[-1]
        nxt = star_product(B, T, T)
        if nxt == T:
            return terms
        terms.append(nxt)


def weakly_soluble(B: SkewBrace, C: frozenset[int]) -> bool:
    return weak_derived_terms(B, C)[-1] == frozenset({0})


# fixators ---------------------------------------------------------------------

def fixator(
    B: SkewBrace,
    variant: str,
    G: Iterable[int],
    C: Iterable[int] | None = None,
    H: Iterable[int] | None = None,
) -> frozenset[int]:
    """Fix^l_G(C/H), Fix^r_G(C/H) or Stab_G(C).

    For ``stab`` the set C plays the role of the additive subgroup A.
    """
    G = frozenset(G)
    n = B.order
    C = frozenset(range(n)) if C is None else frozenset(C)
    H = frozenset({0}) if H is None else frozenset(H)
    if variant == "stab":
        if not is_subgroup(B.add, C):
            raise PreconditionViolated("stab: A is not an additive subgroup")
        if not is_subgroup(B.mul, G):
            raise PreconditionViolated("stab: G is not a multiplicative subgroup")
        out = frozenset(g for g in G if frozenset(B.lam[g][a] for a in C) == C)
        if not is_subgroup(B.mul, out):
            raise BraceError("stabilizer is not a multiplicative subgroup")
        return out
    if not is_subgroup(B.add, H):
        raise PreconditionViolated(f"{variant}: H is not an additive subgroup")
    if variant == "fix-l":
        if not is_subgroup(B.mul, G):
            raise PreconditionViolated("fix-l: G is not a multiplicative subgroup")
        out = frozenset(
            x for x in G
            if frozenset(B.lam[x][h] for h in H) == H
            and all(B.add.table[B.add.inverse[c]][B.lam[x][c]] in H for c in C)
        )
        if not is_subgroup(B.mul, out):
            raise BraceError("left fixator is not a multiplicative subgroup")
        return out
    if variant == "fix-r":
        if not is_subgroup(B.add, G):
            raise PreconditionViolated("fix-r: G is not an additive subgroup")
        out = frozenset(
            x for x in G
            if normalizes(B.add, x, H)
            and all(B.add.table[B.add.inverse[x]][B.lam[c][x]] in H for c in C)
        )
        if not is_subgroup(B.add, out):
            raise BraceError("right fixator is not an additive subgroup")
        return out
    raise ValueError(f"unknown fixator variant {variant!r}")


def additive_centralizer_mod(B: SkewBrace, I: Iterable[int], X: Iterable[int], H: frozenset[int]) -> frozenset[int]:
    """C^+_I(X/H): elements of I normalizing H additively whose commutators with X lie in H."""
    X = list(X)
    return frozenset(
        g for g in I if normalizes(B.add, g, H) and all(B.add.commutator(g, x) in H for x in X)
    )


def multiplicative_centralizer_mod(B: SkewBrace, I: Iterable[int], X: Iterable[int], H: frozenset[int]) -> frozenset[int]:
    X = list(X)
    return frozenset(
        g for g in I if normalizes(B.mul, g, H) and all(B.mul.commutator(g, x) in H for x in X)
    )


def additive_normalizer(B: SkewBrace, A: frozenset[int]) -> frozenset[int]:
    return frozenset(g for g in range(B.order) if normalizes(B.add, g, A))


def multiplicative_normalizer(B: SkewBrace, A: frozenset[int]) -> frozenset[int]:
    return frozenset(g for g in range(B.order) if normalizes(B.mul, g, A))


# minimal ideals ---------------------------------------------------------------

def minimal_ideals(B: SkewBrace) -> list[frozenset[int]]:
    nonzero = [I for I in all_ideals(B) if len(I) > 1]
    return [I for I in nonzero if not any(J < I for J in nonzero)]


def direct_sum_of(B: SkewBrace, parts: list[frozenset[int]]) -> frozenset[int] | None:
    """Sum of the parts if it is direct (each meets the sum of the others in 0), else None."""
    total: frozenset[int] = frozenset({0})
    for k, P in enumerate(parts):
        rest = frozenset({0})
        for j, Q in enumerate(parts):
            if j != k:
                rest = set_sum(B, rest, Q)
        if P & rest != {0}:
            return None
        total = set_sum(B, total, P)
    return total


def greedy_complement(B: SkewBrace, J: frozenset[int], pool: list[frozenset[int]], target: frozenset[int]) -> list[frozenset[int]] | None:
    """Pick members of ``pool`` one by one while the sum with J stays direct; succeed if it reaches target."""
    chosen: list[frozenset[int]] = []
    acc = frozenset(J)
    for P in pool:
        if acc == target:
            break
        if P & acc == {0}:
            chosen.append(P)
            acc = set_sum(B, acc, P)
    return chosen if acc == target else None


def minimal_ideal_data(B: SkewBrace) -> MinimalIdealData:
    def compute() -> MinimalIdealData:
        mins = minimal_ideals(B)
        b_s = frozenset(b for b in range(1, B.order) if principal_ideal(B, b) in mins)
        b_u = frozenset(b for b in b_s if is_trivial_on(B, principal_ideal(B, b)))
        b_v = b_s - b_u
        s = generated(B, b_s, "ideal")
        u = generated(B, b_u, "ideal")
        v = generated(B, b_v, "ideal")
        witness = greedy_complement(B, frozenset({0}), mins, s)
        if witness is None or direct_sum_of(B, witness) != s:
            raise BraceError("minimal ideals do not give a direct decomposition of the socle")
        if set_sum(B, u, v) != s or u & v != {0}:
            raise BraceError("S(B) is not the direct sum of U(B) and V(B)")
        return MinimalIdealData(b_s, b_u, b_v, s, u, v, mins, witness)

    return memo(B, "minimal-data", compute)


def loewy_series(B: SkewBrace) -> SeriesReport:
    """S_0 = 0, S_{k+1} = preimage of S(B/S_k); stops at B or on repetition."""
    terms = [frozenset({0})]
    while terms[-1] != B.full:
        Q, proj = quotient_brace(B, terms[-1])
        sq = minimal_ideal_data(Q).s
        nxt = frozenset(x for x in range(B.order) if proj[x] in sq)
        terms.append(nxt)
        if nxt == terms[-2]:
            break
    reached = terms[-1] == B.full
    stabilized = len(terms) >= 2 and terms[-1] == terms[-2]
    return SeriesReport("loewy", terms, stabilized, len(terms) - 1 if reached else None)


# strongly prime ideals, radicals and N-ideals ---------------------------------

def _bracketed_products(B: SkewBrace, factors: tuple[frozenset[int], ...]) -> set[frozenset[int]]:
    """All fully bracketed star products of the factor sequence."""

    @lru_cache(maxsize=None)
    def rec(i: int, j: int) -> frozenset:
        if j - i == 1:
            return frozenset({factors[i]})
        out = set()
        for k in range(i + 1, j):
            for L in rec(i, k):
                for R in rec(k, j):
                    out.add(star_product(B, L, R))
        return frozenset(out)

    return set(rec(0, len(factors)))


PRODUCT_DEPTH = 4


def is_strongly_prime_brace(B: SkewBrace, depth: int = PRODUCT_DEPTH) -> bool:
    """Every bracketed star product of at most ``depth`` non-zero ideals is non-zero.

    Products are monotone in each factor, so it suffices to test minimal ideals.
    The zero brace has no non-zero ideals and is vacuously strongly prime.
    """
    mins = minimal_ideals(B)
    zero = frozenset({0})
    for m in range(1, depth + 1):
        for seq in itertools.product(mins, repeat=m):
            if zero in _bracketed_products(B, seq):
                return False
    return True


def n_ideal_graph(B: SkewBrace) -> dict[int, frozenset[int]]:
    """Edge b -> b' when b' is a non-zero element of the stabilized weak-derived term of (b)."""
    out = {}
    for b in range(1, B.order):
        tail = weak_derived_terms(B, principal_ideal(B, b))[-1]
        out[b] = tail - {0}
    return out


def cycle_vertices(graph: dict[int, frozenset[int]]) -> frozenset[int]:
    """Vertices from which an infinite walk exists."""
    alive = set(graph)
    changed = True
    while changed:
        changed = False
        for v in list(alive):
            if not (graph[v] & alive):
                alive.discard(v)
                changed = True
    return frozenset(alive)


def is_n_ideal(B: SkewBrace, I: frozenset[int]) -> bool:
    infinite = memo(B, "n-graph-infinite", lambda: cycle_vertices(n_ideal_graph(B)))
    return not (I & infinite)


@dataclass(frozen=True)
class RadicalData:
    strongly_prime_ideals: list[frozenset[int]]
    radical_intersection: frozenset[int]
    weakly_soluble_radical: frozenset[int]
    n_ideal_flags: dict[frozenset[int], bool]
    radicals_agree: bool
    notes: tuple[str, ...]


def strongly_prime_and_radicals(B: SkewBrace) -> RadicalData:
    def compute() -> RadicalData:
        ideals = all_ideals(B)
        primes = []
        for I in ideals:
            Q, _ = quotient_brace(B, I)
            if is_strongly_prime_brace(Q):
                primes.append(I)
        inter = B.full
        for P in primes:
            inter = inter & P
        soluble = [I for I in ideals if weakly_soluble(B, I)]
        wsr = generated(B, frozenset().union(*soluble), "ideal")
        flags = {I: is_n_ideal(B, I) for I in ideals}
        notes = (
            f"star products: all bracketings of up to {PRODUCT_DEPTH} factors, X*Y = <x*y>_+",
            "N-ideals: no element of the ideal starts an infinite walk in the stabilized-term graph",
        )
        return RadicalData(primes, inter, wsr, flags, inter == wsr, notes)

    return memo(B, "radicals", compute)


def is_characteristic(B: SkewBrace, S: frozenset[int], automorphisms: list[tuple[int, ...]]) -> bool:
    return all(frozenset(phi[x] for x in S) == S for phi in automorphisms)


def brace_automorphisms(B: SkewBrace) -> list[tuple[int, ...]]:
    """Additive automorphisms that also preserve the multiplication."""

    def compute():
        n = B.order
        mt = B.mul.table
        return [
            phi for phi in automorphism_group(B.add)
            if all(phi[mt[a][b]] == mt[phi[a]][phi[b]] for a in range(n) for b in range(n))
        ]

    return memo(B, "automorphisms", compute)


def shortest_chain(
    B: SkewBrace,
    candidates: list[frozenset[int]],
    step_ok: Callable[[frozenset[int], frozenset[int]], bool],
    start: frozenset[int] | None = None,
    goal: frozenset[int] | None = None,
) -> list[frozenset[int]] | None:
    """Breadth-first search for a shortest strictly increasing chain start < ... < goal."""
    start = frozenset({0}) if start is None else start
    goal = B.full if goal is None else goal
    if start == goal:
        return [start]
    prev: dict[frozenset[int], frozenset[int] | None] = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in candidates:
            if nxt in prev or not (cur < nxt):
                continue
            if step_ok(cur, nxt):
                prev[nxt] = cur
                if nxt == goal:
                    chain = [nxt]
                    while prev[chain[-1]] is not None:
                        chain.append(prev[chain[-1]])
                    return chain[::-1]
                queue.append(nxt)
    return None

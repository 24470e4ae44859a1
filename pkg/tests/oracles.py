"""Naive reference computations on raw operation tables.

Nothing here imports the library: every routine works from the definitions
with plain loops and subset enumeration, so it can serve as an independent
check of the optimized code paths.  Only meant for orders up to about 8.
"""

from __future__ import annotations

import itertools


def identity_of(t):
    n = len(t)
    return next(e for e in range(n) if all(t[e][x] == x == t[x][e] for x in range(n)))


def inverse(t, a):
    return next(b for b in range(len(t)) if t[a][b] == 0)


def closure(t, seed):
    S = {0} | set(seed)
    while True:
        new = {t[a][b] for a in S for b in S} | {inverse(t, a) for a in S}
        if new <= S:
            return frozenset(S)
        S |= new


def subgroups(t):
    n = len(t)
    out = set()
    for r in range(0, n):
        for gens in itertools.combinations(range(1, n), r):
            out.add(closure(t, gens))
            if len(out) > 10_000:
                raise RuntimeError("too many subgroups")
        if r >= 3:
            break
    return out


def is_associative(t):
    n = len(t)
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def lam(add, mul, b, x):
    return add[inverse(add, b)][mul[b][x]]


def star(add, mul, a, b):
    return add[lam(add, mul, a, b)][inverse(add, b)]


def is_brace(add, mul):
    n = len(add)
    if not (is_associative(add) and is_associative(mul)):
        return False
    for a in range(n):
        na = inverse(add, a)
        for b in range(n):
            for c in range(n):
                if mul[a][add[b][c]] != add[add[mul[a][b]][na]][mul[a][c]]:
                    return False
    return True


def conj(t, g, x):
    return t[t[g][x]][inverse(t, g)]


def comm(t, x, y):
    return t[t[t[x][y]][inverse(t, x)]][inverse(t, y)]


def is_normal(t, S, within=None):
    within = range(len(t)) if within is None else within
    return all(conj(t, g, x) in S for g in within for x in S)


def ideal_kinds(add, mul, S):
    """(subbrace, left ideal, strong left ideal, ideal) flags for a subset S."""
    n = len(add)
    if 0 not in S or closure(add, S) != S:
        return (False, False, False, False)
    sub = closure(mul, S) == S
    left = all(lam(add, mul, b, x) in S for b in range(n) for x in S)
    strong = left and is_normal(add, S)
    ideal = strong and is_normal(mul, S)
    return (sub, left, strong, ideal)


def all_ideals(add, mul, kind_index=3):
    return sorted(
        (S for S in subgroups(add) if ideal_kinds(add, mul, S)[kind_index]),
        key=lambda S: (len(S), sorted(S)),
    )


def star_span(add, mul, X, Y):
    return closure(add, {star(add, mul, x, y) for x in X for y in Y})


def descending(add, mul, kind):
    """Terms of the left (B*T) or right (T*B) series until they repeat."""
    full = frozenset(range(len(add)))
    terms = [full]
    while True:
        T = terms[-1]
        nxt = star_span(add, mul, full, T) if kind == "left" else star_span(add, mul, T, full)
        if nxt == T:
            return terms
        terms.append(nxt)


def class_of(terms, target):
    return terms.index(target) if target in terms else None


def quotient(add, mul, I):
    """Tables of B/I on coset representatives (smallest element of each coset)."""
    n = len(add)
    rep = {}
    for a in range(n):
        coset = frozenset(add[a][i] for i in I)
        rep[a] = min(coset)
    reps = sorted(set(rep.values()))
    idx = {r: k for k, r in enumerate(reps)}
    qa = [[idx[rep[add[x][y]]] for y in reps] for x in reps]
    qm = [[idx[rep[mul[x][y]]] for y in reps] for x in reps]
    proj = [idx[rep[a]] for a in range(n)]
    return qa, qm, proj


def socle(add, mul):
    n = len(add)
    return frozenset(
        a for a in range(n)
        if all(lam(add, mul, a, x) == x for x in range(n)) and all(add[a][x] == add[x][a] for x in range(n))
    )


def annihilator(add, mul):
    n = len(add)
    return frozenset(a for a in socle(add, mul) if all(mul[a][x] == mul[x][a] for x in range(n)))


def kernel_lambda(add, mul):
    n = len(add)
    return frozenset(a for a in range(n) if all(lam(add, mul, a, x) == x for x in range(n)))


def upper_series(add, mul, which):
    """Soc_n or Ann_n via genuine quotients: Soc_{n+1} is the preimage of Soc(B/Soc_n)."""
    n = len(add)
    full = frozenset(range(n))
    terms = [frozenset({0})]
    while terms[-1] != full:
        qa, qm, proj = quotient(add, mul, terms[-1])
        top = socle(qa, qm) if which == "soc" else annihilator(qa, qm)
        nxt = frozenset(a for a in range(n) if proj[a] in top)
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


def design_table(add, mul):
    n = len(add)
    N = n * n
    t = [[0] * N for _ in range(N)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    t[a * n + b][c * n + d] = add[a][lam(add, mul, b, c)] * n + mul[b][d]
    return t


def nilpotency_class(t):
    """Lower central series length, or None when it stabilizes above {0}."""
    n = len(t)
    full = frozenset(range(n))
    G = full
    k = 0
    while G != {0}:
        nxt = closure(t, {comm(t, g, x) for g in full for x in G})
        if nxt == G:
            return None
        G = nxt
        k += 1
    return k


def is_simple_quotient_chain(add, mul, chain):
    """Each term an ideal of the next with trivial quotient (star products inside the lower term)."""
    for lo, hi in zip(chain, chain[1:]):
        if not all(star(add, mul, x, y) in lo for x in hi for y in hi):
            return False
        if not is_normal(add, lo, hi) or not is_normal(mul, lo, hi):
            return False
        if not all(lam(add, mul, b, x) in lo for b in hi for x in lo):
            return False
    return True


def minimal_ideals(add, mul):
    ideals = [I for I in all_ideals(add, mul) if len(I) > 1]
    return [I for I in ideals if not any(J < I for J in ideals)]


def loewy_length(add, mul):
    n = len(add)
    full = frozenset(range(n))
    terms = [frozenset({0})]
    while terms[-1] != full:
        qa, qm, proj = quotient(add, mul, terms[-1])
        mins = minimal_ideals(qa, qm)
        top = closure(qa, set().union(*mins)) if mins else frozenset({0})
        nxt = frozenset(a for a in range(n) if proj[a] in top)
        if nxt == terms[-1]:
            return None
        terms.append(nxt)
    return len(terms) - 1


def braid_holds(left, right):
    n = len(left)

    def r(a, b):
        return left[a][b], right[a][b]

    for x in range(n):
        for y in range(n):
            for z in range(n):
                a, b = r(x, y)
                b, c = r(b, z)
                a, b = r(a, b)
                p, q = r(y, z)
                u, p = r(x, p)
                p, q = r(p, q)
                if (a, b, c) != (u, p, q):
                    return False
    return True


def is_solution(left, right):
    n = len(left)
    images = {(left[a][b], right[a][b]) for a in range(n) for b in range(n)}
    if len(images) != n * n:
        return False
    if any(len(set(left[a])) != n for a in range(n)):
        return False
    if any(len({right[a][b] for a in range(n)}) != n for b in range(n)):
        return False
    return braid_holds(left, right)


def isomorphic(b1, b2):
    """Brute force over bijections fixing 0; b1, b2 are (add, mul) pairs."""
    (a1, m1), (a2, m2) = b1, b2
    n = len(a1)
    if n != len(a2):
        return False
    for rest in itertools.permutations(range(1, n)):
        phi = (0,) + rest
        if all(phi[a1[x][y]] == a2[phi[x]][phi[y]] and phi[m1[x][y]] == m2[phi[x]][phi[y]]
               for x in range(n) for y in range(n)):
            return True
    return False

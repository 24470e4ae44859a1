"""Skew braces on a shared carrier with identity 0."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .canonical import canonical_labeling, isomorphism_from_labelings, refine_signatures
from .errors import BraceError, DistributivityFailure, NotAnIdeal, OrderMismatch
from .groups import (
    FiniteGroup,
    build_group,
    center,
    cosets_representatives,
    direct_product,
    is_subgroup,
    nilpotency_solubility,
    normalizes,
)


@dataclass(frozen=True, eq=False)
class SkewBrace:
    """(B, +, o) with lam[b][x] = -b + b o x and star[a][b] = lam[a][b] - b."""

    order: int
    add: FiniteGroup
    mul: FiniteGroup
    lam: tuple[tuple[int, ...], ...]
    star: tuple[tuple[int, ...], ...]

    def __repr__(self) -> str:
        return f"SkewBrace(order={self.order})"

    # element arithmetic
    def plus(self, a: int, b: int) -> int:
        return self.add.table[a][b]

    def minus(self, a: int, b: int) -> int:
        """a - b."""
        return self.add.table[a][self.add.inverse[b]]

    def neg(self, a: int) -> int:
        return self.add.inverse[a]

    def circ(self, a: int, b: int) -> int:
        return self.mul.table[a][b]

    def minv(self, a: int) -> int:
        return self.mul.inverse[a]

    def add_commutator(self, a: int, b: int) -> int:
        return self.add.commutator(a, b)

    def mul_commutator(self, a: int, b: int) -> int:
        return self.mul.commutator(a, b)

    @cached_property
    def lam_inverse(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for row in self.lam:
            inv = [0] * self.order
            for x, y in enumerate(row):
                inv[y] = x
            out.append(tuple(inv))
        return tuple(out)

    @cached_property
    def full(self) -> frozenset[int]:
        return frozenset(range(self.order))

    @cached_property
    def arrays(self) -> dict[str, np.ndarray]:
        return {
            "add": self.add.array,
            "mul": self.mul.array,
            "neg": np.asarray(self.add.inverse),
            "minv": np.asarray(self.mul.inverse),
            "lam": np.asarray(self.lam),
            "laminv": np.asarray(self.lam_inverse),
            "star": np.asarray(self.star),
        }

    @cached_property
    def canonical(self) -> tuple[bytes, tuple[int, ...]]:
        n = self.order
        orbit = [len({self.lam[b][x] for b in range(n)}) for x in range(n)]
        base = list(zip(self.add.element_orders, self.mul.element_orders, orbit))
        sig = refine_signatures([self.add.table, self.mul.table], base)
        return canonical_labeling([self.add.table, self.mul.table], sig)

    @property
    def canonical_key(self) -> bytes:
        return self.canonical[0]


@dataclass(frozen=True)
class BraceFlags:
    trivial: bool
    almost_trivial: bool
    type_abelian: bool
    type_nilpotent: bool
    type_class: int | None
    mul_abelian: bool
    mul_nilpotent: bool
    mul_class: int | None


def _derived_tables(add: FiniteGroup, mul: FiniteGroup) -> tuple[np.ndarray, np.ndarray]:
    A, M = add.array, mul.array
    neg = np.asarray(add.inverse)
    lam = A[neg[:, None], M]                              # -b + b o x
    star = A[lam, neg[None, :]]                           # lam_a(b) - b
    return lam, star


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    bad = np.argwhere(~mask)
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def distributivity_witness(add: FiniteGroup, mul: FiniteGroup) -> tuple[int, int, int] | None:
    A, M = add.array, mul.array
    neg = np.asarray(add.inverse)
    n = add.order
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    lhs = M[a, A[b, c]]
    rhs = A[A[M[a, b], neg[a]], M[a, c]]
    return _first(lhs == rhs)


def verify_axioms(B: SkewBrace) -> dict[str, tuple[int, ...] | None]:
    """Check every defining identity on all tuples; map family -> first failing tuple."""
    ar = B.arrays
    A, M, N, I, L, Li, S = (ar[k] for k in ("add", "mul", "neg", "minv", "lam", "laminv", "star"))
    n = B.order
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    a2 = np.arange(n)[:, None]
    b2 = np.arange(n)[None, :]
    out: dict[str, tuple[int, ...] | None] = {}
    out["distributivity"] = _first(M[a, A[b, c]] == A[A[M[a, b], N[a]], M[a, c]])
    perm_ok = np.array([len(set(row)) == n for row in L.tolist()])
    w = _first(L[a, A[b, c]] == A[L[a, b], L[a, c]])
    if w is None and not perm_ok.all():
        w = (int(np.argmin(perm_ok)),)
    out["lambda-automorphism"] = w
    out["lambda-homomorphism"] = _first(L[M[a, b], c] == L[a, L[b, c]])
    rel = _first(
        (M[a2, Li[a2, b2]] == A[a2, b2])
        & (M[a2, b2] == A[a2, L[a2, b2]])
        & (N[a2] == L[a2, I[a2]])
    )
    out["relations"] = rel
    s1 = S[a, A[b, c]] == A[A[A[S[a, b], b], S[a, c]], N[b]]
    u = Li[a, b]
    s2 = S[A[a, b], c] == A[A[S[a, S[u, c]], S[u, c]], S[a, c]]
    s3 = S[M[a, b], c] == A[A[S[a, S[b, c]], S[b, c]], S[a, c]]
    out["star-identities"] = _first(s1 & s2 & s3)
    return out


def build_brace(add: FiniteGroup, mul: FiniteGroup, check: bool = True) -> SkewBrace:
    """Validate the skew distributive law and derive the lambda and star tables."""
    if add.order != mul.order:
        raise OrderMismatch(f"orders differ: {add.order} vs {mul.order}")
    w = distributivity_witness(add, mul)
    if w is not None:
        raise DistributivityFailure(w)
    lam, star = _derived_tables(add, mul)
    B = SkewBrace(
        add.order, add, mul,
        tuple(tuple(int(v) for v in row) for row in lam.tolist()),
        tuple(tuple(int(v) for v in row) for row in star.tolist()),
    )
    if check:
        for family, witness in verify_axioms(B).items():
            if witness is not None:
                raise BraceError(f"{family} fails at {witness}")
    return B


def brace_from_tables(add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]], check: bool = True) -> SkewBrace:
    n = len(add)
    return build_brace(build_group(n, add, check=check), build_group(n, mul, check=check), check=check)


def make_trivial_or_almost(G: FiniteGroup, variant: str = "trivial") -> SkewBrace:
    if variant == "trivial":
        return build_brace(G, G)
    if variant == "almost-trivial":
        opp = [[G.table[b][a] for b in G.elements] for a in G.elements]
        return build_brace(G, build_group(G.order, opp, check=False))
    raise ValueError(f"unknown variant {variant!r}")


def eval_lambda(B: SkewBrace, b: int, x: int) -> int:
    return B.lam[b][x]


def eval_star(B: SkewBrace, a: int, b: int) -> int:
    return B.add.table[B.lam[a][b]][B.add.inverse[b]]


def kernel_lambda(B: SkewBrace) -> frozenset[int]:
    ident = tuple(range(B.order))
    return frozenset(b for b in range(B.order) if B.lam[b] == ident)


def core_subsets(B: SkewBrace) -> dict[str, frozenset[int]]:
    """Additive and multiplicative centers, ker lambda, socle and annihilator."""
    z_add = center(B.add)
    z_mul = center(B.mul)
    ker = kernel_lambda(B)
    soc = ker & z_add
    ann = soc & z_mul
    # ker lambda is a trivial sub-brace: both operations agree on it and it is closed
    for a in ker:
        for b in ker:
            if B.circ(a, b) != B.plus(a, b) or B.plus(a, b) not in ker:
                raise BraceError(f"ker lambda is not a trivial sub-brace at {(a, b)}")
    return {"Z_add": z_add, "Z_mul": z_mul, "ker_lambda": ker, "socle": soc, "annihilator": ann}


def brace_flags(B: SkewBrace) -> BraceFlags:
    n = B.order
    trivial = B.add.table == B.mul.table
    almost = all(B.mul.table[a][b] == B.add.table[b][a] for a in range(n) for b in range(n))
    tc, _ = nilpotency_solubility(B.add)
    mc, _ = nilpotency_solubility(B.mul)
    return BraceFlags(trivial, almost, B.add.is_abelian, tc is not None, tc,
                      B.mul.is_abelian, mc is not None, mc)


def ideal_failure(B: SkewBrace, I: Iterable[int]) -> str | None:
    """Tag of the first failed ideal condition, or None."""
    I = frozenset(I)
    if 0 not in I or not is_subgroup(B.add, I):
        return "not-additive-subgroup"
    for g in range(B.order):
        if not normalizes(B.add, g, I):
            return "not-additive-normal"
    for b in range(B.order):
        if any(B.lam[b][x] not in I for x in I):
            return "not-lambda-invariant"
    for g in range(B.order):
        if not normalizes(B.mul, g, I):
            return "not-mul-normal"
    return None


def quotient_brace(B: SkewBrace, I: Iterable[int]) -> tuple[SkewBrace, list[int]]:
    """B/I on least coset representatives, with the projection map."""
    I = frozenset(I)
    tag = ideal_failure(B, I)
    if tag is not None:
        raise NotAnIdeal(tag)
    reps, proj = cosets_representatives(B.add, I)
    add = [[proj[B.plus(a, b)] for b in reps] for a in reps]
    mul = [[proj[B.circ(a, b)] for b in reps] for a in reps]
    return brace_from_tables(add, mul), proj


def direct_sum(B1: SkewBrace, B2: SkewBrace) -> SkewBrace:
    """Componentwise operations; (x, y) has index x * |B2| + y."""
    return build_brace(direct_product(B1.add, B2.add), direct_product(B1.mul, B2.mul))


def is_subbrace(B: SkewBrace, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return is_subgroup(B.add, S) and is_subgroup(B.mul, S)


def sub_brace(B: SkewBrace, S: Iterable[int]) -> tuple[SkewBrace, list[int]]:
    """A sub-brace as a standalone brace; ``labels[i]`` is the element of B with new index i."""
    S = frozenset(S)
    if not is_subbrace(B, S):
        raise BraceError("subset is not a sub-brace")
    labels = sorted(S)
    index = {x: i for i, x in enumerate(labels)}
    add = [[index[B.plus(a, b)] for b in labels] for a in labels]
    mul = [[index[B.circ(a, b)] for b in labels] for a in labels]
    return brace_from_tables(add, mul, check=False), labels


def relabel_brace(B: SkewBrace, perm: Sequence[int]) -> SkewBrace:
    """Transport B along the bijection perm (perm[0] must be 0)."""
    n = B.order
    inv = [0] * n
    for a, b in enumerate(perm):
        inv[b] = a
    add = [[perm[B.add.table[inv[x]][inv[y]]] for y in range(n)] for x in range(n)]
    mul = [[perm[B.mul.table[inv[x]][inv[y]]] for y in range(n)] for x in range(n)]
    return brace_from_tables(add, mul, check=False)


def canonical_key(B: SkewBrace) -> bytes:
    return B.canonical_key


def isomorphism(B1: SkewBrace, B2: SkewBrace) -> tuple[int, ...] | None:
    """A bijection preserving both operations, or None."""
    if B1.order != B2.order:
        return None
    if B1.add.table == B2.add.table and B1.mul.table == B2.mul.table:
        return tuple(range(B1.order))
    k1, l1 = B1.canonical
    k2, l2 = B2.canonical
    if k1 != k2:
        return None
    return isomorphism_from_labelings(l1, l2)


def is_isomorphism(B1: SkewBrace, B2: SkewBrace, phi: Sequence[int]) -> bool:
    n = B1.order
    if sorted(phi) != list(range(n)) or phi[0] != 0:
        return False
    return all(
        phi[B1.plus(a, b)] == B2.plus(phi[a], phi[b]) and phi[B1.circ(a, b)] == B2.circ(phi[a], phi[b])
        for a in range(n) for b in range(n)
    )

"""The design group G(B) = (B,+) x|_lambda (B,o)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .brace import SkewBrace
from .groups import FiniteGroup, build_group, is_normal, is_pi_number, nilpotency_solubility, pi_decomposition, quotient_group
from .ideals import all_ideals, memo, set_circ, set_sum


@dataclass(frozen=True)
class DesignGroup:
    """Pairs (a, b) are encoded row-major as a * n + b, so (0, 0) is index 0."""

    brace: SkewBrace
    group: FiniteGroup
    add_part: frozenset[int]
    mul_part: frozenset[int]

    def encode(self, a: int, b: int) -> int:
        return a * self.brace.order + b

    def decode(self, x: int) -> tuple[int, int]:
        return divmod(x, self.brace.order)

    def embed(self, I: Iterable[int], J: Iterable[int] | None = None) -> frozenset[int]:
        """G(I) = {(a, b) : a, b in I}, or I x J when J is given."""
        I = list(I)
        J = I if J is None else list(J)
        return frozenset(self.encode(a, b) for a in I for b in J)


def design_group(B: SkewBrace) -> DesignGroup:
    def compute() -> DesignGroup:
        n = B.order
        ar = B.arrays
        A, M, L = ar["add"], ar["mul"], ar["lam"]
        a = np.arange(n)[:, None, None, None]
        b = np.arange(n)[None, :, None, None]
        c = np.arange(n)[None, None, :, None]
        d = np.arange(n)[None, None, None, :]
        first = A[a, L[b, c]]
        second = M[b, d]
        tab = (first * n + second).reshape(n * n, n * n)
        G = build_group(n * n, tab, check=n <= 8)
        return DesignGroup(
            B, G,
            frozenset(x * n for x in range(n)),
            frozenset(range(n)),
        )

    return memo(B, "design", compute)


def design_class(B: SkewBrace) -> int | None:
    return memo(B, "design-class", lambda: nilpotency_solubility(design_group(B).group)[0])


@dataclass
class DesignReport:
    commutator_ok: bool = True
    ideal_normal_ok: bool = True
    product_ok: bool = True
    sums_ok: bool = True
    failures: list[tuple[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.commutator_ok and self.ideal_normal_ok and self.product_ok and self.sums_ok


def verify_design_identities(B: SkewBrace) -> DesignReport:
    """[(0,a),(b,0)] = (a*b,0); G(I) normal for ideals I; G(I)G(J) = G(I+J) for sub-braces J."""
    D = design_group(B)
    G = D.group
    rep = DesignReport()
    n = B.order
    for a in range(n):
        for b in range(n):
            got = G.commutator(D.encode(0, a), D.encode(b, 0))
            if got != D.encode(B.star[a][b], 0):
                rep.commutator_ok = False
                rep.failures.append(("commutator", (a, b)))
    ideals = all_ideals(B)
    subs = all_ideals(B, "subbrace")
    for I in ideals:
        GI = D.embed(I)
        if not is_normal(G, GI):
            rep.ideal_normal_ok = False
            rep.failures.append(("ideal-normal", sorted(I)))
        for J in subs:
            GJ = D.embed(J)
            prod = frozenset(G.table[x][y] for x in GI for y in GJ)
            s = set_sum(B, I, J)
            if prod != D.embed(s):
                rep.product_ok = False
                rep.failures.append(("product", (sorted(I), sorted(J))))
            if not (s == set_sum(B, J, I) == set_circ(B, J, I) == set_circ(B, I, J)):
                rep.sums_ok = False
                rep.failures.append(("sums", (sorted(I), sorted(J))))
    return rep


def group_pi_nilpotent(G: FiniteGroup, pi: Iterable[int]) -> int | None:
    """Class of G/O_pi'(G) when that quotient is a pi-group; None otherwise."""
    pi = set(pi)
    _, _, core = pi_decomposition(G, pi)
    Q, _ = quotient_group(G, core)
    if not is_pi_number(Q.order, pi):
        return None
    return nilpotency_solubility(Q)[0]

"""Registry of finitely checkable structural statements about skew braces.

Each check has a scope predicate (the braces it applies to) and a checker that
returns None on success or a Witness naming the violated condition and the
elements involved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .brace import SkewBrace, brace_flags, core_subsets, is_subbrace, quotient_brace, sub_brace, verify_axioms
from .design import design_class, design_group, group_pi_nilpotent, verify_design_identities
from .errors import UnknownCheckId
from .groups import cosets_representatives, is_normal, is_subgroup, nilpotency_solubility, normalizes, prime_factors
from .ideals import (
    additive_subgroups,
    all_ideals,
    brace_automorphisms,
    direct_sum_of,
    greedy_complement,
    is_characteristic,
    is_ideal,
    is_ideal_in,
    is_n_ideal,
    is_strong_left_ideal,
    is_trivial_on,
    loewy_series,
    memo,
    minimal_ideal_data,
    minimal_ideals,
    multiplicative_subgroups,
    set_sum,
    star_set,
    strongly_prime_and_radicals,
    subideal_defect,
    trivial_quotient,
    weakly_soluble,
)
from .series import (
    ZERO,
    ascending_elementwise,
    ascending_series,
    descending_series,
    f_series,
    hall_subgroups,
    lemma_chain,
    left_nil,
    mixed_series,
    nilpotency_profile,
    pi_separating,
    solubility_profile,
    strongly_left_chain,
)
from .ybe import solution_from_brace, verify_solution


@dataclass(frozen=True)
class Witness:
    tag: str
    elements: tuple[tuple[int, ...], ...] = ()

    def as_dict(self) -> dict:
        return {"tag": self.tag, "elements": [list(e) for e in self.elements]}


def fail(tag: str, *parts) -> Witness:
    out = []
    for p in parts:
        if isinstance(p, int):
            out.append((p,))
        elif isinstance(p, (set, frozenset)):
            out.append(tuple(sorted(p)))
        else:
            out.append(tuple(p))
    return Witness(tag, tuple(out))


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    statement: str
    scope: Callable[[SkewBrace], bool]
    checker: Callable[[SkewBrace], Witness | None]


REGISTRY: dict[str, TheoremCheck] = {}


def register(check_id: str, statement: str, scope: Callable[[SkewBrace], bool] | None = None):
    def deco(fn: Callable[[SkewBrace], Witness | None]):
        REGISTRY[check_id] = TheoremCheck(check_id, statement, scope or (lambda B: True), fn)
        return fn

    return deco


# shared predicates -------------------------------------------------------------

def type_nilpotent(B: SkewBrace) -> bool:
    return nilpotency_solubility(B.add)[0] is not None


def both_nilpotent(B: SkewBrace) -> bool:
    return type_nilpotent(B) and nilpotency_solubility(B.mul)[0] is not None


def left_nilpotent_nt(B: SkewBrace) -> bool:
    return type_nilpotent(B) and descending_series(B, "left").class_or_length is not None


def prime_sets(B: SkewBrace) -> list[frozenset[int]]:
    primes = prime_factors(B.order)
    return [frozenset(c) for k in range(1, len(primes) + 1) for c in itertools.combinations(primes, k)]


def sub(B: SkewBrace, S: frozenset[int]) -> SkewBrace:
    return memo(B, ("sub", S), lambda: sub_brace(B, S)[0])


def sub_left_nilpotent_nt(B: SkewBrace, S: frozenset[int]) -> bool:
    return left_nilpotent_nt(sub(B, S))


def left_pi_class(B: SkewBrace, pi: Iterable[int], within: frozenset[int] | None = None) -> int | None:
    """Left pi-nilpotency class of the sub-brace ``within`` (default B)."""
    S = B.full if within is None else within
    bp = frozenset(x for x in hall_subgroups(B, pi)[0] if x in S)
    return mixed_series(B, "L", bp, aux=S).class_or_length


def right_pi_class(B: SkewBrace, pi: Iterable[int]) -> int | None:
    bp = hall_subgroups(B, pi)[0]
    return mixed_series(B, "R", bp).class_or_length


# axioms and the design group -------------------------------------------------------

@register("axioms-relations", "distributivity, lambda is a homomorphism into Aut(B,+), and the basic relations between +, o and lambda")
def _axioms(B):
    w = verify_axioms(B)
    for family in ("distributivity", "lambda-automorphism", "lambda-homomorphism", "relations"):
        if w[family] is not None:
            return fail(family, w[family])
    return None


@register("star-identities", "a*(b+c), (a+b)*c and (a o b)*c expand as the three star identities")
def _star(B):
    w = verify_axioms(B)["star-identities"]
    return None if w is None else fail("star-identities", w)


@register("ker-lambda-trivial", "ker(lambda) is a trivial sub-brace")
def _ker(B):
    K = core_subsets(B)["ker_lambda"]
    if not is_subbrace(B, K):
        return fail("not-subbrace", K)
    if not is_trivial_on(B, K):
        return fail("not-trivial", K)
    return None


@register("design-commutator", "[(0,a),(b,0)] = (a*b,0) in the design group")
def _design_comm(B):
    rep = verify_design_identities(B)
    bad = [f for f in rep.failures if f[0] == "commutator"]
    return fail("commutator", bad[0][1]) if bad else None


@register("design-ideal-normal", "G(I) is normal for ideals I, G(I)G(J) = G(I+J) for sub-braces J, and I+J = J+I = I o J = J o I")
def _design_normal(B):
    rep = verify_design_identities(B)
    for tag, payload in rep.failures:
        if tag != "commutator":
            return fail(tag, *payload) if tag != "ideal-normal" else fail(tag, payload)
    return None


@register("strong-left-ideal-normal", "an additive subgroup A is a strong left ideal iff A x 0 is normal in the design group")
def _strong_normal(B):
    D = design_group(B)
    for A in additive_subgroups(B):
        emb = frozenset(D.encode(a, 0) for a in A)
        if is_normal(D.group, emb) != is_strong_left_ideal(B, A):
            return fail("mismatch", A)
    return None


# nilpotency -------------------------------------------------------------------------

@register("left-nilpotent-iff-design-nilpotent", "B is left nilpotent of nilpotent type iff G(B) is nilpotent")
def _design_nilpotent_equivalence(B):
    lhs = left_nilpotent_nt(B)
    rhs = design_class(B) is not None
    return None if lhs == rhs else fail("left-vs-design", [int(lhs), int(rhs)])


@register("design-class-bound", "class(G(B)) <= n(n+3)/2 for the length n of a central strongly left chain", left_nilpotent_nt)
def _class_bound(B):
    n = nilpotency_profile(B).strong_central
    c = design_class(B)
    if n is None or c is None:
        return fail("missing", [0 if n is None else n, 0 if c is None else c])
    return None if 2 * c <= n * (n + 3) else fail("bound", [c, n])


@register("left-implies-strongly-left", "a left nilpotent brace of nilpotent type has a central strongly left chain", left_nilpotent_nt)
def _strongly_left(B):
    chain = strongly_left_chain(B, central=True)
    if chain is None:
        return fail("no-chain", B.full)
    for lo, hi in zip(chain, chain[1:]):
        if not is_strong_left_ideal(B, hi):
            return fail("not-strong-left-ideal", hi)
        if not star_set(B, B.full, hi) <= lo:
            return fail("star-step", lo, hi)
        if any(B.add.commutator(b, x) not in lo for b in range(B.order) for x in hi):
            return fail("not-central", lo, hi)
    return None


@register("lemma-chain", "Z+_i cap (B^j + Z+_{i-1}) is a central chain of strong left ideals with B * I_{m+1} in I_m", left_nilpotent_nt)
def _lemma_chain(B):
    chain = lemma_chain(B)
    if chain is None or chain[0] != ZERO or chain[-1] != B.full:
        return fail("endpoints", *(chain or []))
    for lo, hi in zip(chain, chain[1:]):
        if not lo <= hi:
            return fail("not-ascending", lo, hi)
        if not is_strong_left_ideal(B, hi):
            return fail("not-strong-left-ideal", hi)
        if not star_set(B, B.full, hi) <= lo:
            return fail("star-step", lo, hi)
        if any(B.add.commutator(b, x) not in lo for b in range(B.order) for x in hi):
            return fail("not-central", lo, hi)
    return None


@register("socle-iff-right-nilpotent-type", "B is socle nilpotent iff right nilpotent of nilpotent type; classes agree for abelian type")
def _soc_right(B):
    prof = nilpotency_profile(B)
    soc = prof.socle is not None
    right = prof.right is not None and prof.type_nilpotent
    if soc != right:
        return fail("equivalence", [int(soc), int(right)])
    if B.add.is_abelian and prof.socle != prof.right:
        return fail("class", [prof.socle or 0, prof.right or 0])
    return None


@register("ascending-elementwise", "the annihilator and socle series agree with their elementwise description")
def _asc_elem(B):
    for kind in ("ann", "soc"):
        a = ascending_series(B, kind).terms
        b = ascending_elementwise(B, kind).terms
        if a != b:
            return fail(kind, *a)
    return None


@register("kid-right-nilpotent", "Kid(B;I) is the largest ideal in Fix^l(B/I), and the Kid series reaches B after exactly the right nilpotency class many steps")
def _kid(B):
    kid = ascending_series(B, "kid").class_or_length
    right = descending_series(B, "right").class_or_length
    return None if kid == right else fail("class", [-1 if kid is None else kid, -1 if right is None else right])


@register("sum-left-nilpotent-ideals", "the sum of two left nilpotent ideals of nilpotent type is left nilpotent of nilpotent type", type_nilpotent)
def _sum_ideals(B):
    good = [I for I in all_ideals(B) if sub_left_nilpotent_nt(B, I)]
    for I, J in itertools.combinations_with_replacement(good, 2):
        if not sub_left_nilpotent_nt(B, set_sum(B, I, J)):
            return fail("sum", I, J)
    return None


@register("fitting-subnormal", "I + J is left nilpotent of nilpotent type for such an ideal I and sub-ideal J")
def _fitting_subnormal(B):
    ideals = [I for I in all_ideals(B) if sub_left_nilpotent_nt(B, I)]
    subs = [J for J in all_ideals(B, "subbrace") if subideal_defect(B, J) is not None and sub_left_nilpotent_nt(B, J)]
    for I in ideals:
        for J in subs:
            if not sub_left_nilpotent_nt(B, set_sum(B, I, J)):
                return fail("sum", I, J)
    return None


@register("sylow-ideals", "if (B,+) and (B,o) are nilpotent, the Sylow subgroups of (B,+) are ideals and B is their direct sum", both_nilpotent)
def _sylow(B):
    parts = []
    for p in prime_factors(B.order):
        P = hall_subgroups(B, {p})[0]
        if not is_ideal(B, P):
            return fail("not-ideal", P)
        parts.append(P)
    total = direct_sum_of(B, parts) if parts else ZERO
    return None if total == B.full else fail("not-direct-sum", *parts)


@register("left-nilpotent-equivalences", "left nilpotent of nilpotent type, G(B) nilpotent, and both groups nilpotent are equivalent")
def _theo_left(B):
    a = left_nilpotent_nt(B)
    b = design_class(B) is not None
    c = both_nilpotent(B)
    return None if a == b == c else fail("mismatch", [int(a), int(b), int(c)])


@register("left-nil-iff-left-nilpotent", "a brace of abelian type is left nil iff left nilpotent", lambda B: B.add.is_abelian)
def _left_nil(B):
    a = left_nil(B)
    b = descending_series(B, "left").class_or_length is not None
    return None if a == b else fail("mismatch", [int(a), int(b)])


@register("index-agreement", "a sub-brace has the same number of additive and multiplicative cosets")
def _index(B):
    for S in all_ideals(B, "subbrace"):
        ra, _ = cosets_representatives(B.add, S)
        rm, _ = cosets_representatives(B.mul, S)
        if len(ra) != len(rm):
            return fail("index", S)
    return None


# solubility, minimal ideals, radicals ------------------------------------------------------

@register("weak-solubility-chain", "the shortest chain of sub-braces with trivial quotients has the weak derived length")
def _weak_chain(B):
    prof = solubility_profile(B)
    length = prof.length(prof.weak_chain)
    return None if length == prof.weak else fail("length", [-1 if length is None else length, -1 if prof.weak is None else prof.weak])


@register("solubility-chain-steps", "each step of a solubility chain is an ideal in the next with a trivial quotient")
def _sol_steps(B):
    prof = solubility_profile(B)
    for chain in (prof.left, prof.strong_left, prof.soluble, prof.weak_chain):
        for lo, hi in zip(chain or [], (chain or [])[1:]):
            if not (is_ideal_in(B, lo, hi) and trivial_quotient(B, lo, hi)):
                return fail("step", lo, hi)
    return None


@register("loewy-reaches-top", "the Loewy series reaches B")
def _loewy(B):
    rep = loewy_series(B)
    return None if rep.class_or_length is not None else fail("stuck", rep.terms[-1])


@register("remak-complement", "every ideal inside a direct sum of minimal ideals has a complement made of some of the summands")
def _remak_complement(B):
    data = minimal_ideal_data(B)
    for J in all_ideals(B):
        if J <= data.s and greedy_complement(B, J, data.direct_sum_witness, data.s) is None:
            return fail("no-complement", J)
    return None


@register("nontrivial-summands-unique", "two direct decompositions of an ideal into minimal ideals share their non-trivial summands", lambda B: B.order > 1)
def _nontrivial_summands(B):
    mins = minimal_ideals(B)
    by_sum: dict[frozenset[int], set[frozenset[int]]] = {}
    for k in range(1, len(mins) + 1):
        for combo in itertools.combinations(mins, k):
            total = direct_sum_of(B, list(combo))
            if total is None:
                continue
            nontrivial = frozenset(I for I in combo if not is_trivial_on(B, I))
            seen = by_sum.setdefault(total, set())
            seen.add(nontrivial)
    for total, options in by_sum.items():
        if len(options) > 1:
            return fail("summands", total)
    return None


def _is_simple(B: SkewBrace) -> bool:
    return B.order > 1 and len(all_ideals(B)) == 2


def characteristic_chain(B: SkewBrace) -> list[frozenset[int]]:
    """Longest chain 0 = A_0 < ... < A_n = B of Aut(B)-invariant sub-braces, each an ideal in the next."""
    autos = brace_automorphisms(B)
    cands = sorted(
        (S for S in all_ideals(B, "subbrace") if is_characteristic(B, S, autos)),
        key=lambda S: (len(S), sorted(S)),
    )
    best: dict[frozenset[int], list[frozenset[int]]] = {}
    for S in cands:
        chain = [S]
        for T in cands:
            if T < S and T in best and is_ideal_in(B, T, S) and len(best[T]) + 1 > len(chain):
                chain = best[T] + [S]
        best[S] = chain
    return best[B.full]


@register("composition-series", "a maximal chain of Aut(B)-invariant sub-braces has factors that are direct sums of simple braces, all trivial or all non-trivial")
def _composition(B):
    chain = characteristic_chain(B)
    if chain[0] != ZERO:
        return fail("bottom", chain[0])
    for lo, hi in zip(chain, chain[1:]):
        top, labels = sub_brace(B, hi)
        index = {x: i for i, x in enumerate(labels)}
        Q, proj = quotient_brace(top, frozenset(index[x] for x in lo))
        data = minimal_ideal_data(Q)
        if data.s != Q.full:
            return fail("not-socle", lo, hi)
        if data.u != Q.full and data.v != Q.full:
            return fail("mixed", lo, hi)
        for part in data.direct_sum_witness:
            if not _is_simple(sub_brace(Q, part)[0]):
                return fail("not-simple", lo, hi)
    return None


@register("strongly-prime-radical", "the strongly prime ideals intersect in the weakly soluble radical, and N-ideals are exactly the weakly soluble ideals")
def _radical(B):
    data = strongly_prime_and_radicals(B)
    if not data.radicals_agree:
        return fail("radical", data.radical_intersection, data.weakly_soluble_radical)
    for I in all_ideals(B):
        if is_n_ideal(B, I) != weakly_soluble(B, I):
            return fail("n-ideal", I)
    return None


@register("fixator-trivial-quotient", "G cap H is a sub-brace containing A as an ideal with trivial quotient when H normalizes A, G stabilizes A and G*H or H*G lies in A")
def _l_ast(B):
    subs = all_ideals(B, "subbrace")
    adds = additive_subgroups(B)
    muls = multiplicative_subgroups(B)
    for A in subs:
        Hs = [H for H in adds if A <= H and all(normalizes(B.add, h, A) for h in H)]
        Gs = [G for G in muls if A <= G and all(frozenset(B.lam[g][a] for a in A) == A for g in G)]
        for G in Gs:
            for H in Hs:
                if not (star_set(B, G, H) <= A or star_set(B, H, G) <= A):
                    continue
                C = G & H
                if not is_subbrace(B, C):
                    return fail("not-subbrace", A, G, H)
                if not (is_ideal_in(B, A, C) and trivial_quotient(B, A, C)):
                    return fail("quotient", A, G, H)
    return None


@register("normalizer-stabilizer", "for c normalizing a sub-brace A additively with A*c in A, c normalizes A multiplicatively iff lambda_c(A) = A")
def _l_norm(B):
    for A in all_ideals(B, "subbrace"):
        for c in range(B.order):
            if not normalizes(B.add, c, A) or not star_set(B, A, [c]) <= A:
                continue
            mul_norm = normalizes(B.mul, c, A)
            stab = frozenset(B.lam[c][a] for a in A) == A
            if mul_norm != stab:
                return fail("mismatch", A, c)
    return None


# pi-nilpotency ------------------------------------------------------------------------

@register("left-pi-nilpotent-f-series", "left pi-nilpotent of class d iff B_pi lies in F^{cd}(B), c the class of (B,+)", lambda B: type_nilpotent(B) and B.order > 1)
def _left_pi_f_series(B):
    c = nilpotency_solubility(B.add)[0]
    F = f_series(B).terms
    for pi in prime_sets(B):
        bp = hall_subgroups(B, pi)[0]
        d = left_pi_class(B, pi)
        if d is None:
            if bp <= F[-1]:
                return fail("contained-but-not-nilpotent", sorted(pi), bp)
        else:
            term = F[min(c * d, len(F) - 1)]
            if not bp <= term:
                return fail("not-contained", sorted(pi), bp, term)
    return None


@register("pi-prime-ideal-conditions", "B_pi' * B_pi = 0, B_pi' is an ideal, and G(B_pi') is normal in G(B) are equivalent", lambda B: type_nilpotent(B) and B.order > 1)
def _pi_prime_conditions(B):
    D = design_group(B)
    for pi in prime_sets(B):
        bp, bq = hall_subgroups(B, pi)
        one = star_set(B, bq, bp) <= ZERO
        two = is_ideal(B, bq)
        three = is_normal(D.group, D.embed(bq))
        if not one == two == three:
            return fail("mismatch", sorted(pi), [int(one), int(two), int(three)])
    return None


@register("pi-nilpotent-equivalences", "left pi-nilpotent, (B_pi' ideal and B_pi left nilpotent), and G(B) pi-nilpotent are equivalent", lambda B: type_nilpotent(B) and B.order > 1)
def _pnilp(B):
    G = design_group(B).group
    for pi in prime_sets(B):
        if not pi_separating(B, pi):
            return fail("not-separating", sorted(pi))
        bp, bq = hall_subgroups(B, pi)
        one = left_pi_class(B, pi) is not None
        two = is_ideal(B, bq) and descending_series(sub(B, bp), "left").class_or_length is not None
        three = group_pi_nilpotent(G, pi) is not None
        if not one == two == three:
            return fail("mismatch", sorted(pi), [int(one), int(two), int(three)])
    return None


def _pi_nilpotent_nt(B: SkewBrace, S: frozenset[int], pi: frozenset[int]) -> bool:
    return type_nilpotent(sub(B, S)) and left_pi_class(B, pi, S) is not None


@register("fitting-pi-nilpotent", "the sum of two left pi-nilpotent ideals of nilpotent type is left pi-nilpotent of nilpotent type", lambda B: B.order > 1)
def _fitting_pi(B):
    ideals = all_ideals(B)
    for pi in prime_sets(B):
        good = [I for I in ideals if _pi_nilpotent_nt(B, I, pi)]
        for I, J in itertools.combinations(good, 2):
            if not _pi_nilpotent_nt(B, set_sum(B, I, J), pi):
                return fail("sum", sorted(pi), I, J)
    return None


@register("fitting-pi-subideal", "a left pi-nilpotent ideal plus a left pi-nilpotent sub-ideal, both of nilpotent type, is left pi-nilpotent of nilpotent type", lambda B: B.order > 1)
def _fitting_pi_sub(B):
    ideals = all_ideals(B)
    subideals = [J for J in all_ideals(B, "subbrace") if subideal_defect(B, J) is not None]
    for pi in prime_sets(B):
        good_i = [I for I in ideals if _pi_nilpotent_nt(B, I, pi)]
        good_j = [J for J in subideals if _pi_nilpotent_nt(B, J, pi)]
        for I in good_i:
            for J in good_j:
                if not _pi_nilpotent_nt(B, set_sum(B, I, J), pi):
                    return fail("sum", sorted(pi), I, J)
    return None


@register("left-nilpotent-iff-all-primes", "B is left nilpotent iff it is left p-nilpotent for every prime p", lambda B: type_nilpotent(B) and B.order > 1)
def _all_primes_left(B):
    left = descending_series(B, "left").class_or_length is not None
    per_p = all(left_pi_class(B, {p}) is not None for p in prime_factors(B.order))
    return None if left == per_p else fail("mismatch", [int(left), int(per_p)])


@register("right-pi-nilpotent-socle", "right pi-nilpotent of class d iff B_pi lies in Soc_n, and then in Soc_{cd}", lambda B: type_nilpotent(B) and B.order > 1)
def _right_pi(B):
    c = nilpotency_solubility(B.add)[0]
    soc = ascending_series(B, "soc").terms
    for pi in prime_sets(B):
        bp = hall_subgroups(B, pi)[0]
        d = right_pi_class(B, pi)
        if d is None:
            if bp <= soc[-1]:
                return fail("contained-but-not-nilpotent", sorted(pi), bp)
        elif not bp <= soc[min(c * d, len(soc) - 1)]:
            return fail("not-contained", sorted(pi), bp)
    return None


@register("right-class-all-primes", "right nilpotent of class <= d iff right p-nilpotent of class <= d for all primes p", lambda B: type_nilpotent(B) and B.order > 1)
def _right_all_primes(B):
    right = descending_series(B, "right").class_or_length
    per_p = [right_pi_class(B, {p}) for p in prime_factors(B.order)]
    worst = None if any(d is None for d in per_p) else max(per_p)
    return None if right == worst else fail("class", [-1 if right is None else right, -1 if worst is None else worst])


@register("socle-equals-f-series", "with (B,o) abelian, Soc_i = F^i for all i, and left and right (pi-)nilpotency agree", lambda B: type_nilpotent(B) and B.mul.is_abelian)
def _socle_f_series(B):
    soc = ascending_series(B, "soc").terms
    F = f_series(B).terms
    for i in range(max(len(soc), len(F))):
        a = soc[min(i, len(soc) - 1)]
        b = F[min(i, len(F) - 1)]
        if a != b:
            return fail("term", [i], a, b)
    left = descending_series(B, "left").class_or_length is not None
    right = descending_series(B, "right").class_or_length is not None
    if left != right:
        return fail("left-right", [int(left), int(right)])
    for pi in prime_sets(B):
        if (left_pi_class(B, pi) is None) != (right_pi_class(B, pi) is None):
            return fail("pi-left-right", sorted(pi))
    return None


def _normal_abelian_hall(B: SkewBrace, pi: frozenset[int]) -> bool:
    bp = hall_subgroups(B, pi)[0]
    if not is_subgroup(B.mul, bp) or not is_normal(B.mul, bp):
        return False
    if any(B.mul.table[x][y] != B.mul.table[y][x] for x in bp for y in bp):
        return False
    return design_class(sub(B, bp)) is not None


@register("normal-abelian-hall-right-pi", "if (B_pi,o) is abelian and normal and G(B_pi) nilpotent, B is right pi-nilpotent",
          lambda B: type_nilpotent(B) and any(_normal_abelian_hall(B, pi) for pi in prime_sets(B)))
def _hall_right(B):
    for pi in prime_sets(B):
        if _normal_abelian_hall(B, pi) and right_pi_class(B, pi) is None:
            return fail("not-right-pi-nilpotent", sorted(pi))
    return None


# Yang-Baxter ----------------------------------------------------------------------

@register("braid-relation", "the derived solution is bijective, non-degenerate and satisfies the braid relation")
def _braid(B):
    rep = verify_solution(solution_from_brace(B))
    if rep.ok:
        return None
    tag = next(iter(rep.witnesses))
    return fail(tag, rep.witnesses[tag])


@register("brace-flags-consistent", "trivial braces have lambda = id; almost trivial braces have lambda_b(x) = -b + x + b")
def _flags(B):
    f = brace_flags(B)
    n = B.order
    if f.trivial != all(B.lam[b][x] == x for b in range(n) for x in range(n)):
        return fail("trivial")
    conj = all(B.lam[b][x] == B.add.conj(B.add.inverse[b], x) for b in range(n) for x in range(n))
    if f.almost_trivial != conj:
        return fail("almost-trivial")
    return None


def get_check(check_id: str) -> TheoremCheck:
    try:
        return REGISTRY[check_id]
    except KeyError:
        raise UnknownCheckId(check_id) from None


@dataclass(frozen=True)
class CellResult:
    check_id: str
    brace_id: str
    status: str          # pass, fail or skip
    witness: Witness | None = None


def run_cell(check: TheoremCheck, brace_id: str, B: SkewBrace) -> CellResult:
    if not check.scope(B):
        return CellResult(check.id, brace_id, "skip")
    w = check.checker(B)
    return CellResult(check.id, brace_id, "pass" if w is None else "fail", w)


@dataclass
class CheckSummary:
    check_id: str
    passed: int = 0
    skipped: int = 0
    failures: list[CellResult] | None = None

    @property
    def applicable(self) -> int:
        return self.passed + len(self.failures or [])


def summarize(cells: Iterable[CellResult], check_ids: list[str]) -> list[CheckSummary]:
    out = {cid: CheckSummary(cid, failures=[]) for cid in check_ids}
    for c in cells:
        s = out[c.check_id]
        if c.status == "pass":
            s.passed += 1
        elif c.status == "skip":
            s.skipped += 1
        else:
            s.failures.append(c)
    return [out[cid] for cid in check_ids]


def check_theorems(entries: Iterable[tuple[str, SkewBrace]], selection: Iterable[str] | None = None) -> list[CheckSummary]:
    """Run the selected checks (all by default) over (id, brace) pairs, in registry order."""
    ids = list(REGISTRY) if selection is None else list(selection)
    checks = [get_check(i) for i in ids]
    cells = [run_cell(chk, bid, B) for bid, B in entries for chk in checks]
    return summarize(cells, ids)

"""Descending, ascending and mixed series, and the classifiers built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .brace import SkewBrace, ideal_failure, is_subbrace
from .errors import BraceError, NotAnIdeal, NotNilpotentType, PreconditionViolated
from .groups import SeriesReport, group_series, is_pi_number, is_pi_prime_number, is_subgroup, nilpotency_solubility, prime_factors
from .ideals import (
    add_closure,
    additive_centralizer_mod,
    all_ideals,
    fixator,
    generated,
    is_ideal,
    is_ideal_in,
    is_strong_left_ideal,
    memo,
    multiplicative_centralizer_mod,
    multiplicative_normalizer,
    set_sum,
    shortest_chain,
    star_product,
    star_set,
    trivial_quotient,
)

ZERO = frozenset({0})


def _run(kind: str, start: frozenset[int], step, target: frozenset[int]) -> SeriesReport:
    terms = [frozenset(start)]
    while terms[-1] != target:
        nxt = frozenset(step(terms[-1]))
        terms.append(nxt)
        if nxt == terms[-2]:
            break
    reached = terms[-1] == target
    stabilized = len(terms) >= 2 and terms[-1] == terms[-2]
    return SeriesReport(kind, terms, stabilized, terms.index(target) if reached else None)


def _add_commutators(B: SkewBrace, X: Iterable[int], Y: Iterable[int]) -> set[int]:
    Y = list(Y)
    return {B.add.commutator(x, y) for x in X for y in Y}


def _mul_commutators(B: SkewBrace, X: Iterable[int], Y: Iterable[int]) -> set[int]:
    Y = list(Y)
    return {B.mul.commutator(x, y) for x in X for y in Y}


# descending -------------------------------------------------------------------

def descending_series(B: SkewBrace, kind: str) -> SeriesReport:
    """right: <T*B>, left: <B*T>, weak-derived: <T*T>, gamma and delta add commutators.

    The reported class is the index of the first zero term, so a right class of
    n means B^(n+1) = 0.
    """
    full = B.full

    def step(T: frozenset[int]) -> frozenset[int]:
        if kind == "right":
            return star_product(B, T, full)
        if kind == "left":
            return star_product(B, full, T)
        if kind == "weak-derived":
            return star_product(B, T, T)
        if kind == "gamma":
            gens = star_set(B, T, full) | _mul_commutators(B, full, T) | _add_commutators(B, full, T)
            return add_closure(B, gens)
        if kind == "delta":
            return add_closure(B, star_set(B, T, full) | _add_commutators(B, full, T))
        raise ValueError(f"unknown descending series {kind!r}")

    if kind not in ("right", "left", "weak-derived", "gamma", "delta"):
        raise ValueError(f"unknown descending series {kind!r}")
    return memo(B, ("desc", kind), lambda: _run(kind, full, step, ZERO))


# ascending ----------------------------------------------------------------------

def kid(B: SkewBrace, I: frozenset[int]) -> frozenset[int]:
    """Largest ideal inside Fix^l_B(B/I), from the intersection of conjugated lambda-images."""
    full = B.full
    F = fixator(B, "fix-l", full, full, I)
    out = set(full)
    for b in range(B.order):
        image = [B.lam[b][x] for x in F]
        for b2 in range(B.order):
            out &= {B.add.conj(b2, y) for y in image}
    K = frozenset(out)
    if not is_ideal(B, K):
        raise BraceError("kernel ideal is not an ideal")
    largest = frozenset().union(*[J for J in all_ideals(B) if J <= F])
    if K != largest:
        raise BraceError("kernel ideal is not the largest ideal inside the left fixator")
    return K


def ascending_series(B: SkewBrace, kind: str, modulo: Iterable[int] | None = None) -> SeriesReport:
    """Upper annihilator, upper socle or kernel-ideal series modulo an ideal."""
    I = ZERO if modulo is None else frozenset(modulo)
    tag = ideal_failure(B, I)
    if tag is not None:
        raise NotAnIdeal(tag)
    full = B.full

    def step(T: frozenset[int]) -> frozenset[int]:
        if kind == "kid":
            nxt = kid(B, T)
        else:
            nxt = fixator(B, "fix-l", full, full, T) & additive_centralizer_mod(B, full, full, T)
            if kind == "ann":
                nxt &= multiplicative_centralizer_mod(B, full, full, T)
            elif kind != "soc":
                raise ValueError(f"unknown ascending series {kind!r}")
        if not is_ideal(B, nxt):
            raise BraceError(f"{kind} term is not an ideal")
        return nxt

    if kind not in ("ann", "soc", "kid"):
        raise ValueError(f"unknown ascending series {kind!r}")
    return memo(B, ("asc", kind, I), lambda: _run(kind, I, step, full))


def ascending_elementwise(B: SkewBrace, kind: str) -> SeriesReport:
    """Ann/Soc series from the membership conditions b*B, [b,B]_+, [b,B]_o in the previous term."""
    full = B.full

    def step(T: frozenset[int]) -> frozenset[int]:
        out = set()
        for b in range(B.order):
            if any(B.star[b][x] not in T for x in full):
                continue
            if any(B.add.commutator(b, x) not in T for x in full):
                continue
            if kind == "ann" and any(B.mul.commutator(b, x) not in T for x in full):
                continue
            out.add(b)
        return frozenset(out)

    return _run(kind, ZERO, step, full)


# mixed -------------------------------------------------------------------------

def f_series(B: SkewBrace, I: frozenset[int] | None = None, G: frozenset[int] | None = None) -> SeriesReport:
    """F_I^0(G) = 0, F_I^{n+1}(G) = Fix^r_I(G/F^n) cap C^+_I(B/F^n)."""
    full = B.full
    I = full if I is None else frozenset(I)
    G = full if G is None else frozenset(G)
    if not is_strong_left_ideal(B, I):
        raise PreconditionViolated("F: I is not a strong left ideal")
    if not is_subgroup(B.mul, G):
        raise PreconditionViolated("F: G is not a multiplicative subgroup")
    stabilizers = multiplicative_normalizer(B, G)

    def step(T: frozenset[int]) -> frozenset[int]:
        nxt = fixator(B, "fix-r", I, G, T) & additive_centralizer_mod(B, I, full, T)
        if not is_subgroup(B.add, nxt) or any(not all(B.add.conj(g, x) in nxt for x in nxt) for g in full):
            raise BraceError("F term is not additively normal")
        for g in stabilizers:
            if frozenset(B.lam[g][x] for x in nxt) != nxt:
                raise BraceError("F term is not stabilized by the multiplicative normalizer of G")
        return nxt

    return memo(B, ("F", I, G), lambda: _run("F", ZERO, step, I))


def mixed_series(B: SkewBrace, variant: str, X: Iterable[int] | None = None, aux: Iterable[int] | None = None) -> SeriesReport:
    """L_{d+1} = <aux * L_d> from L_0 = <X>; R_{n+1} = <R_n * aux> from R_0 = <X>; or the F series.

    For F, X is the strong left ideal I and aux the multiplicative subgroup G.
    """
    full = B.full
    if variant == "F":
        return f_series(B, None if X is None else frozenset(X), None if aux is None else frozenset(aux))
    seed = add_closure(B, full if X is None else X)
    acting = full if aux is None else frozenset(aux)
    if variant == "L":
        return _run("L", seed, lambda T: star_product(B, acting, T), ZERO)
    if variant == "R":
        return _run("R", seed, lambda T: star_product(B, T, acting), ZERO)
    raise PreconditionViolated(f"unknown mixed series {variant!r}")


# nilpotency -----------------------------------------------------------------------

@dataclass(frozen=True)
class NilpotencyProfile:
    left: int | None
    right: int | None
    strongly_left: int | None
    annihilator: int | None
    socle: int | None
    left_nil: bool
    type_nilpotent: bool
    strong_central: int | None = None
    strongly_left_chain: list[frozenset[int]] | None = None


def strongly_left_chain(B: SkewBrace, central: bool = False) -> list[frozenset[int]] | None:
    """Shortest chain 0 = I_0 < ... < I_k = B of strong left ideals with B * I_{i+1} in I_i.

    With ``central`` the quotients must also be additively central.  Built from
    the top by taking the strong left ideal generated by what each step must
    contain; every valid chain contains this one termwise, so it is shortest.
    """
    full = B.full
    terms = [full]
    while terms[-1] != ZERO:
        T = terms[-1]
        gens = set(star_set(B, full, T))
        if central:
            gens |= _add_commutators(B, full, T)
        nxt = generated(B, gens, "strong-left-ideal")
        if nxt == T:
            return None
        terms.append(nxt)
    return terms[::-1]


def lemma_chain(B: SkewBrace) -> list[frozenset[int]] | None:
    """The chain Z^+_i cap (B^j + Z^+_{i-1}) for a left nilpotent brace of nilpotent type.

    Indexed so that entry i*l - j + 1 is Z^+_i cap (B^j + Z^+_{i-1}); None when the
    hypotheses fail.
    """
    k = nilpotency_solubility(B.add)[0]
    left = descending_series(B, "left")
    ell = left.class_or_length
    if k is None or ell is None:
        return None
    if k == 0 or ell == 0:
        return [ZERO]
    upper = group_series(B.add, "upper-central").terms
    powers = left.terms  # powers[j-1] = B^j
    chain: dict[int, frozenset[int]] = {0: ZERO}
    for i in range(1, k + 1):
        for j in range(1, ell + 2):
            Bj = powers[j - 1] if j - 1 < len(powers) else ZERO
            chain[i * ell - j + 1] = upper[i] & set_sum(B, Bj, upper[i - 1])
    return [chain[m] for m in range(k * ell + 1)]


def left_nil(B: SkewBrace) -> bool:
    for b in range(B.order):
        x = b
        for _ in range(B.order + 1):
            x = B.star[b][x]
            if x == 0:
                break
        if x != 0:
            return False
    return True


def nilpotency_profile(B: SkewBrace) -> NilpotencyProfile:
    def compute() -> NilpotencyProfile:
        chain = strongly_left_chain(B)
        central = strongly_left_chain(B, central=True)
        return NilpotencyProfile(
            left=descending_series(B, "left").class_or_length,
            right=descending_series(B, "right").class_or_length,
            strongly_left=None if chain is None else len(chain) - 1,
            annihilator=ascending_series(B, "ann").class_or_length,
            socle=ascending_series(B, "soc").class_or_length,
            left_nil=left_nil(B),
            type_nilpotent=nilpotency_solubility(B.add)[0] is not None,
            strong_central=None if central is None else len(central) - 1,
            strongly_left_chain=chain,
        )

    return memo(B, "nilpotency", compute)


# solubility ------------------------------------------------------------------------

@dataclass(frozen=True)
class SolubilityProfile:
    weak: int | None
    left: list[frozenset[int]] | None
    strong_left: list[frozenset[int]] | None
    soluble: list[frozenset[int]] | None
    weak_chain: list[frozenset[int]] | None = None

    @staticmethod
    def length(chain: list[frozenset[int]] | None) -> int | None:
        return None if chain is None else len(chain) - 1


def solubility_chain(B: SkewBrace, kind: str) -> list[frozenset[int]] | None:
    """Shortest 0 = I_0 < ... < I_k = B with I_n of the given kind in B and I_{n+1}/I_n trivial."""
    cands = all_ideals(B, kind)
    return shortest_chain(
        B, cands, lambda cur, nxt: is_ideal_in(B, cur, nxt) and trivial_quotient(B, cur, nxt)
    )


def solubility_profile(B: SkewBrace) -> SolubilityProfile:
    def compute() -> SolubilityProfile:
        return SolubilityProfile(
            weak=descending_series(B, "weak-derived").class_or_length,
            left=solubility_chain(B, "left-ideal"),
            strong_left=solubility_chain(B, "strong-left-ideal"),
            soluble=solubility_chain(B, "ideal"),
            weak_chain=solubility_chain(B, "subbrace"),
        )

    return memo(B, "solubility", compute)


# pi-nilpotency -----------------------------------------------------------------------

@dataclass(frozen=True)
class PiProfile:
    pi: frozenset[int]
    hall_pi: frozenset[int]
    hall_pi_prime: frozenset[int]
    hall_pi_is_subbrace: bool
    left_class: int | None
    right_class: int | None
    pi_separating: bool
    pi_prime_is_ideal: bool
    prime_conditions_agree: bool
    notes: list[str] = field(default_factory=list)


def hall_subgroups(B: SkewBrace, pi: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    pi = set(pi)
    orders = B.add.element_orders
    return (
        frozenset(a for a in range(B.order) if is_pi_number(orders[a], pi)),
        frozenset(a for a in range(B.order) if is_pi_prime_number(orders[a], pi)),
    )


def pi_separating(B: SkewBrace, pi: Iterable[int]) -> bool:
    pi = set(pi)
    ao, mo = B.add.element_orders, B.mul.element_orders
    for S in all_ideals(B, "subbrace"):
        if all(is_pi_number(ao[x], pi) for x in S) and not all(is_pi_number(mo[x], pi) for x in S):
            return False
        if all(is_pi_prime_number(ao[x], pi) for x in S) and not all(is_pi_prime_number(mo[x], pi) for x in S):
            return False
    return True


def pi_profile(B: SkewBrace, pi: Iterable[int]) -> PiProfile:
    if nilpotency_solubility(B.add)[0] is None:
        raise NotNilpotentType("the additive group is not nilpotent")
    requested = frozenset(pi)
    divisors = set(prime_factors(B.order))
    eff = frozenset(p for p in requested if p in divisors)
    notes = [f"prime {p} does not divide {B.order}; ignored" for p in sorted(requested - eff)]
    bp, bq = hall_subgroups(B, eff)
    left = mixed_series(B, "L", bp).class_or_length
    right = mixed_series(B, "R", bp).class_or_length
    q_ideal = is_ideal(B, bq)
    eq = star_set(B, bq, bp) <= ZERO
    return PiProfile(eff, bp, bq, is_subbrace(B, bp), left, right, pi_separating(B, eff), q_ideal, q_ideal == eq, notes)


def additive_class(B: SkewBrace) -> int | None:
    return nilpotency_solubility(B.add)[0]

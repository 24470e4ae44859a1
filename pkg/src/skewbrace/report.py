"""Per-brace classification reports with a JSON form that round-trips."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

from .brace import SkewBrace, brace_flags, core_subsets
from .design import design_class
from .groups import nilpotency_solubility, prime_factors
from .ideals import KINDS, all_ideals, loewy_series
from .series import ascending_series, descending_series, nilpotency_profile, pi_profile, solubility_profile
from .ybe import solution_from_brace, verify_solution


def _set(S) -> list[int]:
    return sorted(S)


def _chain(chain) -> list[list[int]] | None:
    return None if chain is None else [_set(S) for S in chain]


@dataclass
class Report:
    id: str
    order: int
    flags: dict
    classes: dict
    subsets: dict
    ideal_counts: dict
    loewy_length: int | None
    solubility: dict
    pi_profiles: list
    ybe: dict

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        names = [f.name for f in fields(cls)]
        missing = [n for n in names if n not in data]
        if missing:
            raise ValueError(f"report is missing {missing}")
        return cls(**{n: data[n] for n in names})

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def parse_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def render_text(self) -> str:
        lines = [f"brace {self.id} (order {self.order})"]
        for title, block in (("flags", self.flags), ("classes", self.classes), ("ideal counts", self.ideal_counts)):
            lines.append(f"  {title}:")
            lines.extend(f"    {k}: {_fmt(v)}" for k, v in sorted(block.items()))
        lines.append("  subsets:")
        lines.extend(f"    {k}: {_fmt(v)}" for k, v in sorted(self.subsets.items()))
        lines.append(f"  loewy length: {_fmt(self.loewy_length)}")
        lines.append("  solubility:")
        lines.extend(f"    {k}: {_fmt(v)}" for k, v in sorted(self.solubility.items()))
        for prof in self.pi_profiles:
            lines.append(f"  pi={_fmt(prof['pi'])}: left {_fmt(prof['left_class'])}, right {_fmt(prof['right_class'])}, "
                         f"pi' ideal {_fmt(prof['pi_prime_is_ideal'])}")
        lines.append("  ybe: " + ", ".join(f"{k}={_fmt(v)}" for k, v in sorted(self.ybe.items())))
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "{" + ", ".join(_fmt(x) for x in v) + "}" if all(isinstance(x, int) for x in v) else "[" + " < ".join(_fmt(x) for x in v) + "]"
    return str(v)


def build_report(B: SkewBrace, brace_id: str = "") -> Report:
    flags = asdict(brace_flags(B))
    nil = nilpotency_profile(B)
    sol = solubility_profile(B)
    core = core_subsets(B)
    classes = {
        "left": nil.left,
        "right": nil.right,
        "strongly_left": nil.strongly_left,
        "strong_central": nil.strong_central,
        "annihilator": nil.annihilator,
        "socle": nil.socle,
        "kid": ascending_series(B, "kid").class_or_length,
        "weak_derived": sol.weak,
        "gamma": descending_series(B, "gamma").class_or_length,
        "delta": descending_series(B, "delta").class_or_length,
        "design": design_class(B),
        "additive": nilpotency_solubility(B.add)[0],
        "multiplicative": nilpotency_solubility(B.mul)[0],
        "left_nil": nil.left_nil,
    }
    subsets = {k: _set(v) for k, v in core.items()}
    counts = {k: len(all_ideals(B, k)) for k in KINDS}
    solubility = {
        "left": _chain(sol.left),
        "strong_left": _chain(sol.strong_left),
        "soluble": _chain(sol.soluble),
        "weak": _chain(sol.weak_chain),
    }
    profiles = []
    if nil.type_nilpotent:
        for p in prime_factors(B.order):
            prof = pi_profile(B, {p})
            profiles.append({
                "pi": [p],
                "hall_pi": _set(prof.hall_pi),
                "left_class": prof.left_class,
                "right_class": prof.right_class,
                "pi_prime_is_ideal": prof.pi_prime_is_ideal,
            })
    rep = verify_solution(solution_from_brace(B))
    ybe = {
        "bijective": rep.bijective,
        "braid": rep.braid,
        "left_nondegenerate": rep.left_nondegenerate,
        "right_nondegenerate": rep.right_nondegenerate,
    }
    return Report(brace_id, B.order, flags, classes, subsets, counts,
                  loewy_series(B).class_or_length, solubility, profiles, ybe)

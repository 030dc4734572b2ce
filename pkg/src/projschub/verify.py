"""Sweeps that check the structural identities over a range of instances.

Each suite returns a :class:`SuiteReport`; failures carry the instance and a
witness so a red run says exactly what broke.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from projschub.formulas import (
    coefficient_via_explicit,
    coefficient_via_recurrence,
    grouped_factor,
    in_window,
    multiply_expansions,
)
from projschub.matchings import SubsetP, coefficient_via_matchings, subset_weight_sum
from projschub.models import (
    PuzzleEncoding,
    TableauEncoding,
    puzzle_weight,
    tableau_weight,
    verify_model_sum,
)
from projschub.newton import snp_verify, term_count, verify_idp, verify_scaling
from projschub.polyring import Family, Polynomial, beta_to_t
from projschub.render import to_text


@dataclass
class SuiteReport:
    suite: str
    bounds: dict
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness: dict) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(witness)

    def to_obj(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": self.bounds,
            "checked": self.checked,
            "ok": self.ok,
            "failures": self.failures,
        }

    def to_text(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        bounds = " ".join(f"{k}={v}" for k, v in self.bounds.items())
        lines = [f"{status} {self.suite} ({bounds}): {self.checked} instances, {len(self.failures)} failures"]
        lines += [f"  counterexample: {w}" for w in self.failures]
        return "\n".join(lines)


def _window_triples(max_ij: int):
    for i in range(max_ij + 1):
        for j in range(max_ij + 1):
            for k in range(max(i, j), i + j + 1):
                yield i, j, k


def equivalence(max_ij: int = 7) -> SuiteReport:
    rep = SuiteReport("equivalence", {"max_ij": max_ij})
    for i, j, k in _window_triples(max_ij):
        r = i + j - k
        routes = {
            "matchings": beta_to_t(coefficient_via_matchings(i, j, k)),
            "explicit": coefficient_via_explicit(i, j, k),
            "recurrence": coefficient_via_recurrence(i, j, k),
            "grouped": sum(
                (grouped_factor(SubsetP(i, ps), j) for ps in combinations(range(1, i + 1), r)),
                Polynomial.zero(Family.T),
            ),
        }
        agree = len(set(routes.values())) == 1
        rep.record(
            agree,
            {"i": i, "j": j, "k": k, **{name: to_text(p) for name, p in routes.items()}},
        )
    return rep


def symmetry(max_ij: int = 7) -> SuiteReport:
    rep = SuiteReport("symmetry", {"max_ij": max_ij})
    for i in range(max_ij + 1):
        for j in range(i + 1, max_ij + 1):
            for k in range(i + j + 1):
                a = coefficient_via_matchings(i, j, k)
                b = coefficient_via_matchings(j, i, k)
                rep.record(a == b, {"i": i, "j": j, "k": k, "ij": to_text(a), "ji": to_text(b)})
    return rep


def _reports(name: str, bounds: dict, reports) -> SuiteReport:
    rep = SuiteReport(name, bounds)
    for w in reports:
        rep.record(w.ok, w.to_obj())
    return rep


def snp(max_ij: int = 6) -> SuiteReport:
    return _reports(
        "snp", {"max_ij": max_ij}, (snp_verify(i, j, k) for i, j, k in _window_triples(max_ij))
    )


def scaling(max_ij: int = 3, max_n: int = 3) -> SuiteReport:
    return _reports(
        "scaling",
        {"max_ij": max_ij, "max_n": max_n},
        (
            verify_scaling(i, j, k, N)
            for N in range(1, max_n + 1)
            for i, j, k in _window_triples(max_ij)
        ),
    )


def idp(max_ij: int = 3, max_n: int = 3) -> SuiteReport:
    return _reports(
        "idp",
        {"max_ij": max_ij, "max_n": max_n},
        (verify_idp(i, j, k, N) for N in range(1, max_n + 1) for i, j, k in _window_triples(max_ij)),
    )


def count(max_ij: int = 8) -> SuiteReport:
    rep = SuiteReport("count", {"max_ij": max_ij})
    for i in range(max_ij + 1):
        for j in range(max_ij + 1):
            for k in range(i + j + 1):
                formula, enumerated = term_count(i, j, k)
                rep.record(
                    formula == enumerated,
                    {"i": i, "j": j, "k": k, "formula": formula, "enumerated": enumerated},
                )
    return rep


def associativity(max_ij: int = 4, n: int = 8) -> SuiteReport:
    rep = SuiteReport("associativity", {"max_ij": max_ij, "n": n})
    one = Polynomial.one(Family.T)
    for a in range(max_ij + 1):
        for b in range(max_ij + 1):
            for c in range(max_ij + 1):
                left = multiply_expansions(multiply_expansions({a: one}, b, n), c, n)
                right = multiply_expansions(multiply_expansions({b: one}, c, n), a, n, side="left")
                rep.record(
                    left == right,
                    {
                        "a": a,
                        "b": b,
                        "c": c,
                        "left": {k: to_text(p) for k, p in left.items()},
                        "right": {k: to_text(p) for k, p in right.items()},
                    },
                )
    return rep


def window(max_ij: int = 8, max_n: int = 8) -> SuiteReport:
    rep = SuiteReport("window", {"max_ij": max_ij, "max_n": max_n})
    for n in range(max_n + 1):
        for i in range(min(max_ij, n) + 1):
            for j in range(min(max_ij, n) + 1):
                for k in range(n + 1):
                    nonzero = not coefficient_via_explicit(i, j, k).is_zero()
                    rep.record(
                        nonzero == in_window(i, j, k, n),
                        {"i": i, "j": j, "k": k, "n": n, "nonzero": nonzero},
                    )
    return rep


def models(max_ij: int = 6) -> SuiteReport:
    rep = SuiteReport("models", {"max_ij": max_ij})
    for i, j, k in _window_triples(max_ij):
        r = i + j - k
        for ps in combinations(range(1, i + 1), r):
            P = SubsetP(i, ps)
            pw = puzzle_weight(PuzzleEncoding(i, j, P))
            tw = tableau_weight(TableauEncoding(i, j, k, P))
            mw = beta_to_t(subset_weight_sum(i, j, P))
            rep.record(
                pw == tw == mw,
                {"i": i, "j": j, "P": list(ps), "puzzle": to_text(pw), "tableau": to_text(tw), "matchings": to_text(mw)},
            )
        for kind in ("puzzle", "tableau"):
            w = verify_model_sum(i, j, k, kind)
            rep.record(w.ok, w.to_obj())
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "equivalence": equivalence,
    "symmetry": symmetry,
    "snp": snp,
    "scaling": scaling,
    "idp": idp,
    "count": count,
    "associativity": associativity,
    "models": models,
    "window": window,
}

"""Run laws against a domain and report verdicts."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Any, Iterator

from ..errors import BudgetExceeded, PastRevError
from ..scalar import QQ, FieldTag, parse_field
from .laws import CATALOG, Ctx, Law, get_law
from .rng import CounterRNG

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class DomainSpec:
    """Where and how to check a law.

    ``n``, ``m``, ``p`` left as ``None`` take the law's default shape.
    ``strategy`` is ``"exhaustive"`` (prime fields only) or ``"random"``.
    """

    field: FieldTag = QQ
    n: int | None = None
    m: int | None = None
    p: int | None = None
    strategy: str = "random"
    trials: int = 200
    seed: int = 0
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if not self.field.exact:
            raise ValueError("laws are checked over exact fields only (q or gf:p)")
        if self.strategy not in ("exhaustive", "random"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.strategy == "exhaustive" and self.field.kind != "prime":
            raise ValueError("exhaustive checking needs a finite field")

    def shape_for(self, law: Law) -> tuple[int, int, int]:
        dn, dm, dp = law.defaults
        return (
            dn if self.n is None else self.n,
            dm if self.m is None else self.m,
            dp if self.p is None else self.p,
        )

    def to_json(self) -> dict:
        return {
            "field": self.field.selector,
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "strategy": self.strategy,
            "trials": self.trials,
            "seed": self.seed,
            "budget": self.budget,
        }

    @classmethod
    def from_json(cls, data: dict) -> "DomainSpec":
        return cls(
            field=parse_field(data["field"]),
            n=data.get("n"),
            m=data.get("m"),
            p=data.get("p"),
            strategy=data.get("strategy", "random"),
            trials=data.get("trials", 200),
            seed=data.get("seed", 0),
            budget=data.get("budget", DEFAULT_BUDGET),
        )


@dataclass
class LawReport:
    law: str
    domain: DomainSpec
    shape: tuple[int, int, int]
    cases_checked: int
    status: str
    expected: str
    witness: dict[str, Any] | None = None
    reason: str | None = None

    @property
    def as_expected(self) -> bool:
        return self.status == "skipped" or self.status == self.expected

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "domain": self.domain.to_json(),
            "shape": list(self.shape),
            "cases_checked": self.cases_checked,
            "status": self.status,
            "expected": self.expected,
            "witness": self.witness,
            "reason": self.reason,
        }

    @classmethod
    def from_json(cls, data: dict) -> "LawReport":
        return cls(
            law=data["law"],
            domain=DomainSpec.from_json(data["domain"]),
            shape=tuple(data["shape"]),
            cases_checked=data["cases_checked"],
            status=data["status"],
            expected=data["expected"],
            witness=data.get("witness"),
            reason=data.get("reason"),
        )


@dataclass
class SuiteReport:
    reports: list[LawReport] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.as_expected for r in self.reports)

    def to_json(self) -> dict:
        return {"ok": self.ok, "reports": [r.to_json() for r in self.reports]}


def _skip_reason(law: Law, domain: DomainSpec, shape) -> str | None:
    if law.odd_char and domain.field.characteristic == 2:
        return "needs characteristic other than 2"
    if law.requires is not None:
        return law.requires(*shape)
    return None


def _cases(law: Law, domain: DomainSpec, slots) -> Iterator[dict]:
    f = domain.field
    if not slots:
        yield {}
        return
    if domain.strategy == "exhaustive":
        pools = [s.enumerate(f) for s in slots]
        names = [s.name for s in slots]
        for combo in itertools.product(*pools):
            yield dict(zip(names, combo))
    else:
        rng = CounterRNG(domain.seed)
        for _ in range(domain.trials):
            yield {s.name: s.sample(f, rng) for s in slots}


def case_count(law: Law, domain: DomainSpec, shape=None) -> int:
    shape = shape or domain.shape_for(law)
    slots = law.slots(*shape)
    if not slots:
        return 1
    if domain.strategy == "random":
        return domain.trials
    q = domain.field.modulus
    return math.prod(q ** s.free_dim for s in slots)


def _run(law: Law, domain: DomainSpec, stop_at_first: bool = True) -> LawReport:
    shape = domain.shape_for(law)
    report = LawReport(law.id, domain, shape, 0, "pass", law.expected)
    reason = _skip_reason(law, domain, shape)
    if reason:
        report.status, report.reason = "skipped", reason
        return report
    total = case_count(law, domain, shape)
    if domain.strategy == "exhaustive" and total > domain.budget:
        raise BudgetExceeded(f"{law.id}: {total} cases exceed the budget of {domain.budget}")
    slots = law.slots(*shape)
    ctx = Ctx(domain.field, *shape)
    for case in _cases(law, domain, slots):
        report.cases_checked += 1
        if not law.predicate(ctx, **case):
            report.status = "fail"
            report.witness = {s.name: s.to_json(case[s.name]) for s in slots}
            if stop_at_first:
                break
    return report


def check_law(law_id: str, domain: DomainSpec) -> LawReport:
    """Check one law; stops at the first witness."""
    return _run(get_law(law_id), domain)


def find_counterexample(law_id: str, domain: DomainSpec) -> dict | None:
    """The first failing case in enumeration order, or ``None``."""
    return check_law(law_id, domain).witness


def recheck(report: LawReport) -> bool:
    """Re-evaluate the witness in ``report``; True when it still violates the law."""
    if report.witness is None:
        return False
    law = get_law(report.law)
    field = report.domain.field
    slots = law.slots(*report.shape)
    values = {s.name: s.from_json(report.witness[s.name], field) for s in slots}
    return not law.predicate(Ctx(field, *report.shape), **values)


def run_suite(domain: DomainSpec, laws=None) -> SuiteReport:
    """Check every law (or the given ids) under ``domain``.

    Refuted laws are only meaningful under exhaustive search and are
    skipped under random sampling.
    """
    ids = list(CATALOG) if laws is None else [get_law(i).id for i in laws]
    out = SuiteReport()
    for law_id in ids:
        law = CATALOG[law_id]
        if law.status == "refuted" and domain.strategy == "random":
            shape = domain.shape_for(law)
            out.reports.append(
                LawReport(law.id, domain, shape, 0, "skipped", law.expected,
                          reason="refuted law; only exhaustive search is conclusive"))
            continue
        try:
            out.reports.append(_run(law, domain))
        except PastRevError as exc:
            shape = domain.shape_for(law)
            out.reports.append(LawReport(law.id, domain, shape, 0, "skipped", law.expected, reason=str(exc)))
    return out

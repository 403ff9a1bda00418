"""
Integrity checks for character tables.

Every invariant is recorded as a CheckResult (pass / fail / skipped) with
witnesses; nothing here raises on a failed check.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from math import gcd
from typing import List, Optional

from prettytable import PrettyTable

from src.exact.cyclotomic import cyc_sum
from src.tables.model import CharacterTable

logger = logging.getLogger(__name__)

LABEL_RE = re.compile(r"^(\d+)[A-Z]+$")

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

MAX_WITNESSES = 10


@dataclass
class CheckResult:
    name: str
    status: str
    witnesses: List[str] = field(default_factory=list)


@dataclass
class ValidationReport:
    subject: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def check(self, name: str) -> Optional[CheckResult]:
        for c in self.checks:
            if c.name == name:
                return c
        return None

    def add(self, name: str, failures: List[str], passed: str = "", skip_reason: Optional[str] = None) -> CheckResult:
        if skip_reason is not None:
            result = CheckResult(name, SKIPPED, [skip_reason])
        elif failures:
            shown = failures[:MAX_WITNESSES]
            if len(failures) > MAX_WITNESSES:
                shown.append(f"... and {len(failures) - MAX_WITNESSES} more")
            result = CheckResult(name, FAIL, shown)
        else:
            result = CheckResult(name, PASS, [passed] if passed else [])
        self.checks.append(result)
        return result

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [{"name": c.name, "status": c.status, "witnesses": list(c.witnesses)} for c in self.checks],
        }


# -------------------------
# Individual checks
# -------------------------
def _labels(t: CharacterTable, report: ValidationReport) -> None:
    failures = []
    seen = set()
    for c in t.classes:
        if c.label in seen:
            failures.append(f"duplicate label {c.label}")
        seen.add(c.label)
        # product classes are labelled "xY,zW"; their order is the lcm of the parts
        matches = [LABEL_RE.match(part) for part in c.label.split(",")]
        if not all(matches):
            failures.append(f"{c.label}: label is not order followed by letters")
            continue
        implied = 1
        for m in matches:
            implied = implied * int(m.group(1)) // gcd(implied, int(m.group(1)))
        if implied != c.element_order:
            failures.append(f"{c.label}: label implies element order {implied}, class has {c.element_order}")
    report.add("class_labels", failures, f"{t.class_count} labels")


def _class_sizes(t: CharacterTable, report: ValidationReport) -> None:
    failures = [
        f"{c.label}: centralizer {c.centralizer_order} does not divide {t.group_order}"
        for c in t.classes
        if c.centralizer_order <= 0 or t.group_order % c.centralizer_order
    ]
    report.add("centralizer_divides_order", failures, f"|G| = {t.group_order}")
    if failures:
        return
    sizes = t.class_sizes()
    total = sum(sizes)
    if len(sizes) <= 12:
        shown = "+".join(str(s) for s in sizes) + f" = {total}"
    else:
        shown = f"sum of {len(sizes)} class sizes = {total}"
    if t.partial:
        fails = [f"{shown} exceeds |G| = {t.group_order}"] if total > t.group_order else []
        report.add("class_equation", fails, f"{shown} <= {t.group_order} (partial)")
    else:
        fails = [f"{shown} != {t.group_order}"] if total != t.group_order else []
        report.add("class_equation", fails, shown)


def _power_maps(t: CharacterTable, report: ValidationReport) -> None:
    missing = [p for p in t.primes() if p not in t.power_maps]
    if t.partial:
        report.add("power_maps_present", [], skip_reason="partial table")
    else:
        report.add(
            "power_maps_present",
            [f"no {p}-power map" for p in missing],
            "primes " + ", ".join(str(p) for p in t.primes()),
        )

    failures = []
    for p, pm in sorted(t.power_maps.items()):
        for c, j in zip(t.classes, pm):
            image = t.classes[j]
            expected = c.element_order // gcd(c.element_order, p)
            if image.element_order != expected:
                failures.append(
                    f"POWERMAP {p}: {c.label}->{image.label} has order {image.element_order}, expected {expected}"
                )
    if not t.power_maps:
        report.add("power_map_orders", [], skip_reason="no power maps")
    else:
        report.add("power_map_orders", failures, f"{len(t.power_maps)} maps consistent")


def _degrees(t: CharacterTable, report: ValidationReport) -> None:
    failures = []
    degrees = []
    one = t._identity_index()
    for row_name, values in t.irreducibles:
        d = values[one]
        if not d.is_integer() or d.to_rational() <= 0:
            failures.append(f"{row_name}: degree {d} is not a positive integer")
        else:
            degrees.append(int(d.to_rational()))
    report.add("degrees_positive", failures, "degrees " + ", ".join(str(d) for d in degrees))

    if t.partial:
        report.add("degree_sum", [], skip_reason="partial table")
        return
    total = sum(d * d for d in degrees)
    fails = [] if total == t.group_order else [f"sum of squared degrees {total} != {t.group_order}"]
    report.add("degree_sum", fails, f"sum of squared degrees = {total}")

    fails = []
    if len(t.irreducibles) != t.class_count:
        fails.append(f"{len(t.irreducibles)} irreducibles for {t.class_count} classes")
    report.add("square_table", fails, f"{t.class_count} x {t.class_count}")


def _row_orthogonality(t: CharacterTable, report: ValidationReport) -> None:
    if t.partial:
        report.add("row_orthogonality", [], skip_reason="partial table")
        return
    sizes = t.class_sizes()
    conj_rows = [tuple(v.conj() for v in values) for _, values in t.irreducibles]
    failures = []
    names = t.irreducible_names
    for i, (_, chi) in enumerate(t.irreducibles):
        weighted = [v.scale(s) if s != 1 else v for v, s in zip(chi, sizes)]
        for j in range(i, len(conj_rows)):
            total = cyc_sum(a * b for a, b in zip(weighted, conj_rows[j]))
            value = total / t.group_order
            expected = 1 if i == j else 0
            if value != expected:
                failures.append(f"<{names[i]}, {names[j]}> = {value}, expected {expected}")
    report.add("row_orthogonality", failures, f"{len(names)} rows orthonormal")


def _column_orthogonality(t: CharacterTable, report: ValidationReport) -> None:
    if t.partial:
        report.add("column_orthogonality", [], skip_reason="partial table")
        return
    columns = [t.column(j) for j in range(t.class_count)]
    conj_columns = [tuple(v.conj() for v in col) for col in columns]
    failures = []
    for g in range(t.class_count):
        for h in range(g, t.class_count):
            total = cyc_sum(a * b for a, b in zip(columns[g], conj_columns[h]))
            expected = t.classes[g].centralizer_order if g == h else 0
            if total != expected:
                failures.append(f"columns {t.classes[g].label}, {t.classes[h].label}: sum = {total}, expected {expected}")
    report.add("column_orthogonality", failures, f"{t.class_count} columns orthogonal")


def _inverse_classes(t: CharacterTable, report: ValidationReport) -> None:
    failures = []
    checked = 0
    for i in range(t.class_count):
        inv = t.inverse_index(i)
        if inv is None:
            continue
        checked += 1
        for row_name, values in t.irreducibles:
            if values[i].conj() != values[inv]:
                failures.append(
                    f"{row_name}: conj of value on {t.classes[i].label} differs from value on {t.classes[inv].label}"
                )
    if not checked:
        report.add("inverse_class_conjugation", [], skip_reason="no inverse class identifiable via power maps")
    else:
        report.add("inverse_class_conjugation", failures, f"{checked} classes checked")


def validate_table(t: CharacterTable) -> ValidationReport:
    report = ValidationReport(subject=f"table {t.name}" + (" (PARTIAL)" if t.partial else ""))
    _labels(t, report)
    _class_sizes(t, report)
    _power_maps(t, report)
    _degrees(t, report)
    _row_orthogonality(t, report)
    _column_orthogonality(t, report)
    _inverse_classes(t, report)
    logger.info("validated %s: %s", t.name, "ok" if report.ok else "FAILED")
    return report


# -------------------------
# Text report
# -------------------------
def generate_validation_report(report: ValidationReport) -> str:
    lines = []
    lines.append("=" * 90)
    lines.append(f"VALIDATION: {report.subject}")
    lines.append("=" * 90)
    lines.append(f"\nStatus: {'[OK] all checks pass' if report.ok else '[FAIL] violations found'}")

    summary = PrettyTable()
    summary.field_names = ["check", "status", "witness"]
    summary.align = "l"
    for c in report.checks:
        summary.add_row([c.name, c.status, c.witnesses[0] if c.witnesses else ""])
    lines.append(summary.get_string())

    failed = [c for c in report.checks if c.status == FAIL]
    if failed:
        lines.append("\nFAILURES")
        lines.append("=" * 90)
        for c in failed:
            lines.append(f"\n {c.name}")
            for i, w in enumerate(c.witnesses, 1):
                lines.append(f"      {i}. {w}")
    lines.append("=" * 90)
    return "\n".join(lines)

from __future__ import annotations

from typing import List

from src.errors import FusionError
from src.tables.model import FusionMap
from src.tables.validate_table import ValidationReport


def _order_failures(fu: FusionMap) -> List[str]:
    out = []
    for c, j in zip(fu.source.classes, fu.map):
        d = fu.target.classes[j]
        if c.element_order != d.element_order:
            out.append(f"order-mismatch: {c.label} (order {c.element_order}) -> {d.label} (order {d.element_order})")
    return out


def _centralizer_failures(fu: FusionMap) -> List[str]:
    out = []
    for c, j in zip(fu.source.classes, fu.map):
        d = fu.target.classes[j]
        if d.centralizer_order % c.centralizer_order:
            out.append(
                f"{c.label} -> {d.label}: centralizer {c.centralizer_order} does not divide {d.centralizer_order}"
            )
    return out


def _power_map_failures(fu: FusionMap) -> List[str]:
    out = []
    for p in sorted(set(fu.source.power_maps) & set(fu.target.power_maps)):
        src_pm = fu.source.power_maps[p]
        dst_pm = fu.target.power_maps[p]
        for i, c in enumerate(fu.source.classes):
            if fu.map[src_pm[i]] != dst_pm[fu.map[i]]:
                out.append(
                    f"POWERMAP {p}: fusion of {fu.source.classes[src_pm[i]].label} is "
                    f"{fu.target.classes[fu.map[src_pm[i]]].label}, but {p}-th power of "
                    f"{fu.target.classes[fu.map[i]].label} is {fu.target.classes[dst_pm[fu.map[i]]].label}"
                )
    return out


def validate_fusion(fu: FusionMap) -> ValidationReport:
    report = ValidationReport(subject=f"fusion {fu.source.name} -> {fu.target.name}")
    report.add("element_orders", _order_failures(fu), f"{fu.source.class_count} classes")
    report.add("centralizer_orders", _centralizer_failures(fu), "source centralizers divide target centralizers")
    common = sorted(set(fu.source.power_maps) & set(fu.target.power_maps))
    if common:
        report.add("power_maps_commute", _power_map_failures(fu), "primes " + ", ".join(map(str, common)))
    else:
        report.add("power_maps_commute", [], skip_reason="no common power maps")
    return report


def check_fusion(fu: FusionMap) -> None:
    """Raise FusionError naming the first violated invariant."""
    for failures in (_order_failures(fu), _centralizer_failures(fu), _power_map_failures(fu)):
        if failures:
            raise FusionError(failures[0])

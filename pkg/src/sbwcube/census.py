"""Exhaustive enumeration of SBW specs on few squares."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterator

from .diagram import diagram_from_pd_text, extract_sbw, format_pd, reconstruct_diagram
from .sbw import SbwSpec, all_specs, canonical_form, criterion_check, format_spec, isomorphic

RAW_CAP = 3
ISO_CAP = 4


class CensusCapError(ValueError):
    pass


def _check_cap(n: int, cap: int, override: bool) -> None:
    if n < 1:
        raise CensusCapError("n must be at least 1")
    if n > cap and not override:
        raise CensusCapError(f"n={n} exceeds the cap of {cap}; pass the override flag to run it anyway")


def enumerate_specs(n: int, up_to_iso: bool = False, override: bool = False) -> Iterator[SbwSpec]:
    """All (2n)! pairings, or the first member of each isomorphism class."""
    _check_cap(n, ISO_CAP if up_to_iso else RAW_CAP, override)
    if not up_to_iso:
        yield from all_specs(n)
        return
    seen = set()
    for spec in all_specs(n):
        key = canonical_form(spec)
        if key not in seen:
            seen.add(key)
            yield spec


@dataclass
class ClassRow:
    representative: SbwSpec
    size: int
    verdict: bool
    chi: int
    genera: tuple[int, ...]
    connected: bool
    link_components: int | None = None
    round_trip: bool | None = None

    def as_dict(self) -> dict:
        return {
            "spec": format_spec(self.representative),
            "size": self.size,
            "verdict": self.verdict,
            "chi_M": self.chi,
            "genus": list(self.genera),
            "connected": self.connected,
            "link_components": self.link_components,
            "round_trip": self.round_trip,
        }


@dataclass
class CensusRow:
    n: int
    total: int
    classes: list[ClassRow] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def as_dict(self) -> dict:
        return {"n": self.n, "total_bijections": self.total,
                "isomorphism_classes": self.class_count,
                "classes": [c.as_dict() for c in self.classes]}


def _round_trip(spec: SbwSpec):
    rec = reconstruct_diagram(spec)
    if rec.pd is None:
        return None, False
    again = extract_sbw(diagram_from_pd_text(format_pd(rec.pd)))
    return rec.diagram.components, isomorphic(again, spec)


def classify(spec: SbwSpec, size: int = 1) -> ClassRow:
    report = criterion_check(spec)
    row = ClassRow(spec, size, report.verdict, report.chi, report.genera, report.connected)
    if report.verdict:
        row.link_components, row.round_trip = _round_trip(spec)
    return row


def census_report(n: int, override: bool = False) -> CensusRow:
    """Group all (2n)! pairings into isomorphism classes and classify each."""
    _check_cap(n, ISO_CAP, override)
    sizes: dict[bytes, list] = {}
    for spec in all_specs(n):
        key = canonical_form(spec)
        if key in sizes:
            sizes[key][1] += 1
        else:
            sizes[key] = [spec, 1]
    row = CensusRow(n, factorial(2 * n))
    for spec, size in sizes.values():
        row.classes.append(classify(spec, size))
    return row


def raw_report(n: int, override: bool = False) -> CensusRow:
    """One row per pairing, no deduplication."""
    _check_cap(n, RAW_CAP, override)
    row = CensusRow(n, factorial(2 * n))
    row.classes = [classify(spec) for spec in all_specs(n)]
    return row


def format_table(row: CensusRow) -> str:
    lines = [f"n={row.n} bijections={row.total} rows={row.class_count}",
             f"{'#':>4} {'size':>6} {'verdict':>7} {'chi_M':>5} {'genus':>7} {'conn':>4} "
             f"{'links':>5} {'trip':>4}"]
    for k, c in enumerate(row.classes, start=1):
        links = "-" if c.link_components is None else str(c.link_components)
        trip = "-" if c.round_trip is None else ("ok" if c.round_trip else "FAIL")
        lines.append(f"{k:>4} {c.size:>6} {'yes' if c.verdict else 'no':>7} {c.chi:>5} "
                     f"{','.join(map(str, c.genera)):>7} {'yes' if c.connected else 'no':>4} "
                     f"{links:>5} {trip:>4}")
    yes = sum(c.size for c in row.classes if c.verdict)
    lines.append(f"verdict yes: {yes} of {row.total}")
    return "\n".join(lines) + "\n"

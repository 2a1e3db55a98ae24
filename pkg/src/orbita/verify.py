"""Self-check suite behind ``orbita verify``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import catalog, reference
from .errors import OrbitaError
from .grading import (
    WeightedDiagram,
    characteristic_element,
    grading_of,
    height_from_coefficients,
    height_from_grading,
    orbit_dimension,
    weighted_diagram_of,
)
from .mfclass import classify_action, module_fingerprint
from .report import analyze, report_dict, to_json, to_tsv
from .rootsys import LieTypeSpec, build_root_system

MAX_CLASSICAL_RANK = 12


def supported_specs(max_rank: int = MAX_CLASSICAL_RANK) -> list[LieTypeSpec]:
    out = [LieTypeSpec("A", r) for r in range(1, max_rank + 1)]
    out += [LieTypeSpec(f, r) for f in "BC" for r in range(2, max_rank + 1)]
    out += [LieTypeSpec("D", r) for r in range(4, max_rank + 1)]
    out += [LieTypeSpec.parse(x) for x in ("E6", "E7", "E8", "F4", "G2")]
    return out


@dataclass
class CheckResult:
    name: str
    count: int = 0
    failures: list[str] = field(default_factory=list)

    def expect(self, ok: bool, detail: str):
        self.count += 1
        if not ok:
            self.failures.append(detail)


def _records() -> Iterator[tuple[LieTypeSpec, catalog.SphericalOrbitRecord]]:
    for spec in supported_specs():
        for rec in catalog.enumerate_spherical(spec):
            yield spec, rec


def check_root_counts(res: CheckResult):
    for spec in supported_specs():
        rs = build_root_system(spec)
        res.expect(len(rs.all_roots) == reference.root_count(spec), f"{spec}: {len(rs.all_roots)} roots")


def check_highest_roots(res: CheckResult):
    for spec in supported_specs():
        rs = build_root_system(spec)
        want = reference.highest_coeffs(spec)
        res.expect(rs.highest_coeffs == want, f"{spec}: highest root coefficients {rs.highest_coeffs}, expected {want}")


def check_heights(res: CheckResult):
    for spec in supported_specs(6):
        rs = build_root_system(spec)
        for labels in itertools.product((0, 1, 2), repeat=spec.rank):
            if not any(labels):
                continue
            wdd = WeightedDiagram(spec, labels)
            a, b = height_from_coefficients(rs, wdd), height_from_grading(rs, wdd)
            res.expect(a == b, f"{spec} {wdd}: height {a} vs {b}")


def check_round_trip(res: CheckResult):
    for spec, rec in _records():
        rs = build_root_system(spec)
        back = weighted_diagram_of(rs, characteristic_element(rs, rec.diagram))
        res.expect(back == rec.diagram, f"{spec} {rec.case_label}: round trip gave {back}")
        gd = grading_of(rs, rec.diagram)[1]
        res.expect(gd.total_dim == rs.dim, f"{spec} {rec.case_label}: grading dims sum to {gd.total_dim}")


def check_minimal_dims(res: CheckResult):
    for name, want in reference.MINIMAL_ORBIT_DIMS.items():
        spec = LieTypeSpec.parse(name)
        rs = build_root_system(spec)
        got = orbit_dimension(rs, WeightedDiagram(spec, reference.minimal_diagram(spec)))
        res.expect(got == want, f"{spec}: minimal orbit dimension {got}, expected {want}")


def check_minimal_equivalence(res: CheckResult):
    for spec, rec in _records():
        res.expect((rec.dim_n == 1) == rec.is_minimal, f"{spec} {rec.case_label}: dim n={rec.dim_n}")


def check_slices(res: CheckResult):
    for spec, rec in _records():
        rs = build_root_system(spec)
        gd = grading_of(rs, rec.diagram)[1]
        catalog.validate_slice(rs, gd, list(rec.slice.generators), rec.slice.dim, f"{spec} {rec.case_label}")
        res.count += 1
        if rec.height == 2:
            res.expect(all(g == 2 for _, g in rec.slice.generators), f"{spec} {rec.case_label}: grade-3 slice root")


def check_mf_bookkeeping(res: CheckResult):
    for spec, rec in _records():
        rs = build_root_system(spec)
        fams = classify_action(module_fingerprint(rs, rec))
        mod = sum(f.module_dim for f in fams)
        sl = sum(f.slice_dim for f in fams)
        res.expect(mod == rec.dim_n, f"{spec} {rec.case_label}: family dims {mod}, dim n {rec.dim_n}")
        res.expect(sl == rec.slice.dim, f"{spec} {rec.case_label}: family slices {sl}, slice {rec.slice.dim}")


def check_determinism(res: CheckResult):
    for name in ("E7", "F4", "D6"):
        spec = LieTypeSpec.parse(name)
        recs = catalog.enumerate_spherical(spec)
        res.expect(to_tsv(recs) == to_tsv(catalog.enumerate_spherical(spec)), f"{spec}: TSV differs between runs")
        for rec in recs:
            a = to_json(report_dict(analyze(spec, rec.diagram.labels)))
            b = to_json(report_dict(analyze(spec, rec.diagram.labels)))
            res.expect(a == b, f"{spec} {rec.case_label}: JSON differs between runs")


CHECKS: dict[str, Callable[[CheckResult], None]] = {
    "root-counts": check_root_counts,
    "highest-roots": check_highest_roots,
    "heights": check_heights,
    "round-trip": check_round_trip,
    "minimal-dims": check_minimal_dims,
    "minimal-equivalence": check_minimal_equivalence,
    "slices": check_slices,
    "mf-bookkeeping": check_mf_bookkeeping,
    "determinism": check_determinism,
}


def run_checks(only: list[str] | None = None) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS.items():
        if only and name not in only:
            continue
        res = CheckResult(name)
        try:
            fn(res)
        except OrbitaError as exc:
            res.failures.append(str(exc))
        results.append(res)
    return results

"""One-shot analysis of a weighted diagram and its canonical serializations."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from .catalog import SliceDescriptor, SphericalOrbitRecord, format_partition, lookup
from .grading import WeightedDiagram, grading_of, height, orbit_dimension
from .levi import LeviDescriptor, classify_levi
from .mfclass import ActionFamily, classify_action, module_fingerprint
from .rootsys import LieTypeSpec, build_root_system

REPORT_VERSION = "orbita-report/1"


@dataclass(frozen=True)
class AnalysisReport:
    spec: LieTypeSpec
    diagram: WeightedDiagram
    H: tuple[Fraction, ...]
    height: int
    spherical: bool
    dims: dict[int, int]
    levi: LeviDescriptor
    record: Optional[SphericalOrbitRecord]
    slice: Optional[SliceDescriptor]
    families: Optional[tuple[ActionFamily, ...]]
    orbit_dimension: int


def analyze(spec: LieTypeSpec, labels: Sequence[int]) -> AnalysisReport:
    rs = build_root_system(spec)
    wdd = WeightedDiagram(spec, tuple(labels))
    H, gd = grading_of(rs, wdd)
    ht = height(rs, wdd)
    rec = lookup(spec, wdd)
    families = None
    if rec is not None:
        families = tuple(classify_action(module_fingerprint(rs, rec)))
    return AnalysisReport(
        spec=spec,
        diagram=wdd,
        H=H.coords,
        height=ht,
        spherical=ht in (2, 3),
        dims=gd.dims,
        levi=classify_levi(rs, wdd),
        record=rec,
        slice=rec.slice if rec else None,
        families=families,
        orbit_dimension=orbit_dimension(rs, wdd),
    )


def _coords(v: Sequence[Fraction]) -> list[str]:
    return [str(Fraction(x)) for x in v]


def case_name(rec: SphericalOrbitRecord) -> str:
    return rec.case_label if rec.p is None else f"{rec.case_label}(p={rec.p})"


def record_dict(rec: SphericalOrbitRecord) -> dict[str, Any]:
    return {
        "case": rec.case_label,
        "p": rec.p,
        "diagram": list(rec.diagram.labels),
        "height": rec.height,
        "is_minimal": rec.is_minimal,
        "jordan_type": list(rec.jordan_type) if rec.jordan_type else None,
        "levi": levi_dict(rec.levi),
        "dim_g2": rec.dim_g2,
        "dim_g3": rec.dim_g3,
        "summands": [{"grade": g, "dim": d, "module": m} for g, d, m in rec.summands],
        "notes": list(rec.notes),
    }


def levi_dict(levi: LeviDescriptor) -> dict[str, Any]:
    return {
        "components": [[f, r] for f, r in levi.components],
        "center_dim": levi.center_dim,
        "name": levi.matrix_name,
    }


def slice_dict(sl: SliceDescriptor) -> dict[str, Any]:
    return {
        "generators": [{"root": _coords(r.coords), "grade": g, "text": str(r)} for r, g in sl.generators],
        "iso_label": sl.iso_label,
        "dim": sl.dim,
    }


def family_dict(f: ActionFamily) -> dict[str, Any]:
    return {
        "id": f.id,
        "p": f.p,
        "group": f.group_label,
        "module": f.module_label,
        "slice": f.slice_label,
        "involution": f.involution_label,
        "module_dim": f.module_dim,
        "slice_dim": f.slice_dim,
    }


def report_dict(rep: AnalysisReport) -> dict[str, Any]:
    return {
        "version": REPORT_VERSION,
        "spec": rep.spec.name,
        "diagram": list(rep.diagram.labels),
        "H": _coords(rep.H),
        "height": rep.height,
        "spherical": rep.spherical,
        "dims": {str(m): d for m, d in rep.dims.items()},
        "levi": levi_dict(rep.levi),
        "record": record_dict(rep.record) if rep.record else None,
        "slice": slice_dict(rep.slice) if rep.slice else None,
        "families": [family_dict(f) for f in rep.families] if rep.families is not None else None,
        "orbit_dimension": rep.orbit_dimension,
    }


def to_json(data: Any) -> str:
    """Canonical form: sorted keys, fixed separators, non-ASCII kept verbatim."""
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def _flatten(prefix: str, value: Any, out: list[tuple[str, str]]):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], out)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, _scalar(value)))


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "(" + ",".join(_scalar(v) for v in value) + ")"
    return str(value)


def to_text(data: dict[str, Any]) -> str:
    """``key: value`` lines carrying exactly the fields of the JSON form."""
    rows: list[tuple[str, str]] = []
    _flatten("", data, rows)
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


TSV_COLUMNS = ("case", "diagram", "height", "levi", "dim_g2", "dim_g3", "slice_dim", "jordan_type")


def tsv_row(rec: SphericalOrbitRecord) -> tuple[str, ...]:
    return (
        case_name(rec),
        str(rec.diagram),
        str(rec.height),
        rec.levi.matrix_name,
        str(rec.dim_g2),
        str(rec.dim_g3),
        str(rec.slice.dim),
        format_partition(rec.jordan_type) if rec.jordan_type else "-",
    )


def to_tsv(records: Sequence[SphericalOrbitRecord]) -> str:
    lines = ["\t".join(TSV_COLUMNS)] + ["\t".join(tsv_row(r)) for r in records]
    return "\n".join(lines) + "\n"


def to_table(records: Sequence[SphericalOrbitRecord]) -> str:
    rows = [TSV_COLUMNS] + [tsv_row(r) for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(TSV_COLUMNS))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in rows)


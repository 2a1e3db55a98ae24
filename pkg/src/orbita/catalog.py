"""Case lists of spherical nilpotent orbits with their slices.

Every case is a row of data: parameter range, label pattern, slice generators,
Levi type, graded summands and Jordan type, all as functions of ``(n, p)``.
``n`` is the size parameter of the classical realization (``sl(n)``,
``so(2n+1)``, ``sp(n)``, ``so(2n)``) and is unused for exceptional types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

from . import linalg
from .errors import CatalogError, NotARoot
from .grading import WeightedDiagram, grading_of, height
from .levi import Component, LeviDescriptor, classify_levi, make_descriptor
from .reference import minimal_diagram
from .rootsys import LieTypeSpec, Root, RootSystem, build_root_system, parse_root

Summand = tuple[int, int, str]  # (grade, complex dimension, module label)


@dataclass(frozen=True)
class SliceDescriptor:
    generators: tuple[tuple[Root, int], ...]
    iso_label: str
    dim: int


@dataclass(frozen=True)
class SphericalOrbitRecord:
    case_label: str
    spec: LieTypeSpec
    p: Optional[int]
    diagram: WeightedDiagram
    height: int
    jordan_type: Optional[tuple[int, ...]]
    is_minimal: bool
    levi: LeviDescriptor
    summands: tuple[Summand, ...]
    slice: SliceDescriptor
    dim_g2: int
    dim_g3: int
    notes: tuple[str, ...] = ()

    @property
    def dim_n(self) -> int:
        return self.dim_g2 + self.dim_g3


@dataclass(frozen=True)
class CaseFormula:
    label: str
    type_key: str
    height: int
    params: Callable[[int], Iterable[Optional[int]]]
    labels: Callable[[int, Optional[int]], dict[int, int]]
    slice: Callable[[int, int, Optional[int]], list[tuple[Root, int]]]
    slice_label: Callable[[int, Optional[int]], str]
    slice_dim: Callable[[int, Optional[int]], int]
    levi: Callable[[int, Optional[int]], tuple[list[Component], int]]
    summands: Callable[[int, Optional[int]], list[Summand]]
    jordan: Optional[Callable[[int, Optional[int]], list[int]]] = None
    notes: tuple[str, ...] = ()  # known differences from the printed orbit tables


def _e(N: int, *terms: tuple[int, int]) -> Root:
    coords = [Fraction(0)] * N
    for i, c in terms:
        coords[i - 1] += c
    return Root(tuple(coords))


def _r(k: int) -> str:
    return "ℝ" if k == 1 else f"ℝ^{k}"


def _c(k: int) -> str:
    return "C" if k == 1 else f"C^{k}"


def _alt(p: int) -> str:
    return f"Alt({2 * p},C)"


def _parts(*blocks: tuple[int, int]) -> list[int]:
    out: list[int] = []
    for part, mult in blocks:
        out.extend([part] * mult)
    return out


def _const(value):
    return lambda n, p: value


def _exceptional(N: int, gens: list[tuple[str, int]]):
    return lambda _N, n, p: [(parse_root(t, N), g) for t, g in gens]


# classical slices -----------------------------------------------------------


def _slice_a(N, n, p):
    return [(_e(N, (i, 1), (n - p + i, -1)), 2) for i in range(1, p + 1)]


def _slice_pairs(N, n, p):
    return [(_e(N, (2 * i - 1, 1), (2 * i, 1)), 2) for i in range(1, p + 1)]


def _slice_d2_very_even(N, n, p):
    return _slice_pairs(N, n, p - 1) + [(_e(N, (2 * p - 1, 1), (2 * p, -1)), 2)]


def _slice_first_pm(N, n, p):
    return [(_e(N, (1, 1), (2, 1)), 2), (_e(N, (1, 1), (2, -1)), 2)]


def _slice_c(N, n, p):
    return [(_e(N, (i, 2)), 2) for i in range(1, p + 1)]


def _height3_alt(N, p):
    alt = [(_e(N, (2 * i, 1), (2 * i + 1, 1)), 2) for i in range(1, p + 1)]
    vec = [(_e(N, (1, 1), (2 * j, 1)), 3) for j in range(1, p + 1)]
    return alt, vec


def _slice_height3(N, n, p):
    alt, vec = _height3_alt(N, p)
    q = 2 * p + 2
    return [(_e(N, (1, 1), (q, 1)), 2), (_e(N, (1, 1), (q, -1)), 2)] + alt + vec


def _slice_b3_special(N, n, p):
    alt, vec = _height3_alt(N, p)
    return [(_e(N, (1, 1)), 2)] + alt + vec


def _height3_summands(vector_dim):
    return lambda n, p: [(2, vector_dim(n, p), _c(vector_dim(n, p))), (2, p * (2 * p - 1), _alt(p)), (3, 2 * p, _c(2 * p))]


_A = "A"
_CASES: list[CaseFormula] = [
    CaseFormula(
        "A", "A", 2,
        params=lambda n: range(1, (n + 1) // 2),
        labels=lambda n, p: {p: 1, n - p: 1},
        slice=_slice_a,
        slice_label=lambda n, p: _r(p),
        slice_dim=lambda n, p: p,
        levi=lambda n, p: ([(_A, p - 1), (_A, n - 2 * p - 1), (_A, p - 1)], 2),
        summands=lambda n, p: [(2, p * p, f"M({p},C)")],
        jordan=lambda n, p: _parts((2, p), (1, n - 2 * p)),
    ),
    CaseFormula(
        "A′", "A", 2,
        params=lambda n: [n // 2] if n % 2 == 0 else [],
        labels=lambda n, p: {p: 2},
        slice=_slice_a,
        slice_label=lambda n, p: _r(p),
        slice_dim=lambda n, p: p,
        levi=lambda n, p: ([(_A, p - 1), (_A, p - 1)], 1),
        summands=lambda n, p: [(2, p * p, f"M({p},C)")],
        jordan=lambda n, p: _parts((2, p)),
        notes=("center dimension 1 from the rank count; the printed row gives C^2",),
    ),
    CaseFormula(
        "B1", "B", 2,
        params=lambda n: [None],
        labels=lambda n, p: {1: 2},
        slice=_slice_first_pm,
        slice_label=_const(_r(2)),
        slice_dim=_const(2),
        levi=lambda n, p: ([("B", n - 1)], 1),
        summands=lambda n, p: [(2, 2 * n - 1, _c(2 * n - 1))],
        jordan=lambda n, p: _parts((3, 1), (1, 2 * n - 2)),
        notes=("label m_1=2 from H=2E_1; one printed row gives m_1=1",),
    ),
    CaseFormula(
        "B2", "B", 2,
        params=lambda n: range(1, n // 2 + 1),
        labels=lambda n, p: {2 * p: 1},
        slice=_slice_pairs,
        slice_label=lambda n, p: _r(p),
        slice_dim=lambda n, p: p,
        levi=lambda n, p: ([(_A, 2 * p - 1), ("B", n - 2 * p)], 1),
        summands=lambda n, p: [(2, p * (2 * p - 1), _alt(p))],
        jordan=lambda n, p: _parts((2, 2 * p), (1, 2 * n - 4 * p + 1)),
    ),
    CaseFormula(
        "B3", "B", 3,
        params=lambda n: [p for p in range(1, n) if 2 * p + 1 < n],
        labels=lambda n, p: {1: 1, 2 * p + 1: 1},
        slice=_slice_height3,
        slice_label=lambda n, p: f"({_r(2)}⊕{_r(p)})⊕{_r(p)}",
        slice_dim=lambda n, p: 2 * p + 2,
        levi=lambda n, p: ([(_A, 2 * p - 1), ("B", n - 2 * p - 1)], 2),
        summands=_height3_summands(lambda n, p: 2 * n - 4 * p - 1),
        jordan=lambda n, p: _parts((3, 1), (2, 2 * p), (1, 2 * n - 4 * p - 2)),
    ),
    CaseFormula(
        "B3s", "B", 3,
        params=lambda n: [(n - 1) // 2] if n % 2 == 1 else [],
        labels=lambda n, p: {1: 1, 2 * p + 1: 1},
        slice=_slice_b3_special,
        slice_label=lambda n, p: f"(ℝ⊕{_r(p)})⊕{_r(p)}",
        slice_dim=lambda n, p: 2 * p + 1,
        levi=lambda n, p: ([(_A, 2 * p - 1)], 2),
        summands=_height3_summands(lambda n, p: 1),
        jordan=lambda n, p: _parts((3, 1), (2, 2 * p)),
    ),
    CaseFormula(
        "C", "C", 2,
        params=lambda n: range(1, n),
        labels=lambda n, p: {p: 1},
        slice=_slice_c,
        slice_label=lambda n, p: _r(p),
        slice_dim=lambda n, p: p,
        levi=lambda n, p: ([(_A, p - 1), ("C", n - p)], 1),
        summands=lambda n, p: [(2, p * (p + 1) // 2, f"Sym({p},C)")],
        jordan=lambda n, p: _parts((2, p), (1, 2 * n - 2 * p)),
    ),
    CaseFormula(
        "C′", "C", 2,
        params=lambda n: [n],
        labels=lambda n, p: {n: 2},
        slice=_slice_c,
        slice_label=lambda n, p: _r(n),
        slice_dim=lambda n, p: n,
        levi=lambda n, p: ([(_A, n - 1)], 1),
        summands=lambda n, p: [(2, n * (n + 1) // 2, f"Sym({n},C)")],
        jordan=lambda n, p: _parts((2, n)),
    ),
    CaseFormula(
        "D1", "D", 2,
        params=lambda n: [None],
        labels=lambda n, p: {1: 2},
        slice=_slice_first_pm,
        slice_label=_const(_r(2)),
        slice_dim=_const(2),
        levi=lambda n, p: ([("D", n - 1)], 1),
        summands=lambda n, p: [(2, 2 * n - 2, _c(2 * n - 2))],
        jordan=lambda n, p: _parts((3, 1), (1, 2 * n - 3)),
    ),
    CaseFormula(
        "D2", "D", 2,
        params=lambda n: range(1, (n - 2) // 2 + 1),
        labels=lambda n, p: {2 * p: 1},
        slice=_slice_pairs,
        slice_label=lambda n, p: _r(p),
        slice_dim=lambda n, p: p,
        levi=lambda n, p: ([(_A, 2 * p - 1), ("D", n - 2 * p)], 1),
        summands=lambda n, p: [(2, p * (2 * p - 1), _alt(p))],
        jordan=lambda n, p: _parts((2, 2 * p), (1, 2 * n - 4 * p)),
    ),
    CaseFormula(
        "D2′", "D", 2,
        params=lambda n: [(n - 1) // 2] if n % 2 == 1 else [],
        labels=lambda n, p: {2 * p: 1, 2 * p + 1: 1},
        slice=_slice_pairs,
        slice_label=lambda n, p: _r(p),
        slice_dim=lambda n, p: p,
        levi=lambda n, p: ([(_A, 2 * p - 1)], 2),
        summands=lambda n, p: [(2, p * (2 * p - 1), _alt(p))],
        jordan=lambda n, p: _parts((2, 2 * p), (1, 2)),
    ),
    CaseFormula(
        "D2″", "D", 2,
        params=lambda n: [n // 2] if n % 2 == 0 else [],
        labels=lambda n, p: {2 * p: 2},
        slice=_slice_pairs,
        slice_label=lambda n, p: _r(p),
        slice_dim=lambda n, p: p,
        levi=lambda n, p: ([(_A, 2 * p - 1)], 1),
        summands=lambda n, p: [(2, p * (2 * p - 1), _alt(p))],
        jordan=lambda n, p: _parts((2, 2 * p)),
    ),
    CaseFormula(
        "D2‴", "D", 2,
        params=lambda n: [n // 2] if n % 2 == 0 else [],
        labels=lambda n, p: {2 * p - 1: 2},
        slice=_slice_d2_very_even,
        slice_label=lambda n, p: _r(p),
        slice_dim=lambda n, p: p,
        levi=lambda n, p: ([(_A, 2 * p - 1)], 1),
        summands=lambda n, p: [(2, p * (2 * p - 1), _alt(p))],
        jordan=lambda n, p: _parts((2, 2 * p)),
    ),
    CaseFormula(
        "D3", "D", 3,
        params=lambda n: [p for p in range(1, n) if 2 * p + 2 < n],
        labels=lambda n, p: {1: 1, 2 * p + 1: 1},
        slice=_slice_height3,
        slice_label=lambda n, p: f"({_r(2)}⊕{_r(p)})⊕{_r(p)}",
        slice_dim=lambda n, p: 2 * p + 2,
        levi=lambda n, p: ([(_A, 2 * p - 1), ("D", n - 2 * p - 1)], 2),
        summands=_height3_summands(lambda n, p: 2 * n - 4 * p - 2),
        jordan=lambda n, p: _parts((3, 1), (2, 2 * p), (1, 2 * n - 4 * p - 3)),
    ),
    CaseFormula(
        "D3′", "D", 3,
        params=lambda n: [(n - 2) // 2] if n % 2 == 0 else [],
        labels=lambda n, p: {1: 1, 2 * p + 1: 1, 2 * p + 2: 1},
        slice=_slice_height3,
        slice_label=lambda n, p: f"({_r(2)}⊕{_r(p)})⊕{_r(p)}",
        slice_dim=lambda n, p: 2 * p + 2,
        levi=lambda n, p: ([(_A, 2 * p - 1)], 3),
        summands=_height3_summands(lambda n, p: 2),
        jordan=lambda n, p: _parts((3, 1), (2, 2 * p), (1, 1)),
    ),
]


def _exc(label, key, height, labels, gens, slice_label, levi, summands):
    N = 3 if key == "G2" else 4 if key == "F4" else 8
    return CaseFormula(
        label, key, height,
        params=lambda n: [None],
        labels=_const({i + 1: m for i, m in enumerate(labels) if m}),
        slice=_exceptional(N, gens),
        slice_label=_const(slice_label),
        slice_dim=_const(len(gens)),
        levi=_const(levi),
        summands=_const(summands),
    )


_CASES += [
    _exc("E6-1", "E6", 2, (0, 1, 0, 0, 0, 0),
         [("1/2(e8-e7-e6+e5+e4+e3+e2+e1)", 2)],
         "ℝ", ([(_A, 5)], 1), [(2, 1, "C")]),
    _exc("E6-2", "E6", 2, (1, 0, 0, 0, 0, 1),
         [("1/2(e8-e7-e6+e5+e4+e3+e2+e1)", 2), ("1/2(e8-e7-e6+e5-e4-e3-e2-e1)", 2)],
         "ℝ^2", ([("D", 4)], 2), [(2, 8, "C^8")]),
    _exc("E6-3", "E6", 3, (0, 0, 0, 1, 0, 0),
         [("1/2(e8-e7-e6+e5+e4-e3+e2-e1)", 2), ("1/2(e8-e7-e6+e5-e4+e3-e2+e1)", 2),
          ("e4+e3", 2), ("1/2(e8-e7-e6+e5+e4+e3+e2+e1)", 3)],
         "ℝ^3⊕ℝ", ([(_A, 2), (_A, 2), (_A, 1)], 1), [(2, 9, "M(3,C)"), (3, 2, "C^2")]),
    _exc("E7-1", "E7", 2, (1, 0, 0, 0, 0, 0, 0),
         [("e8-e7", 2)], "ℝ", ([("D", 6)], 1), [(2, 1, "C")]),
    _exc("E7-2", "E7", 2, (0, 0, 0, 0, 0, 1, 0),
         [("e8-e7", 2), ("e6+e5", 2)], "ℝ^2", ([("D", 5), (_A, 1)], 1), [(2, 10, "C^10")]),
    _exc("E7-3", "E7", 2, (0, 0, 0, 0, 0, 0, 2),
         [("e8-e7", 2), ("e6+e5", 2), ("e6-e5", 2)],
         "ℝ^3", ([("E", 6)], 1), [(2, 27, "J(C)")]),
    _exc("E7-4", "E7", 3, (0, 0, 1, 0, 0, 0, 0),
         [("1/2(e8-e7+e6+e5+e4-e3-e2-e1)", 2), ("1/2(e8-e7+e6+e5-e4-e3+e2-e1)", 2),
          ("1/2(e8-e7-e6-e5+e4+e3+e2-e1)", 2), ("e8-e7", 3)],
         "ℝ^3⊕ℝ", ([(_A, 5), (_A, 1)], 1), [(2, 15, "Alt(6,C)"), (3, 2, "C^2")]),
    _exc("E7-5", "E7", 3, (0, 1, 0, 0, 0, 0, 1),
         [("1/2(e8-e7-e6+e5+e4+e3+e2+e1)", 2),
          ("1/2(e8-e7+e6+e5+e4-e3-e2-e1)", 2), ("1/2(e8-e7+e6-e5-e4+e3+e2-e1)", 2), ("e6+e1", 2),
          ("e8-e7", 3), ("1/2(e8-e7+e6+e5+e4+e3-e2+e1)", 3), ("1/2(e8-e7+e6+e5-e4+e3+e2+e1)", 3)],
         "(ℝ⊕ℝ^3)⊕ℝ^3", ([(_A, 5)], 2), [(2, 1, "C"), (2, 15, "Alt(6,C)"), (3, 6, "C^6")]),
    _exc("E8-1", "E8", 2, (0, 0, 0, 0, 0, 0, 0, 1),
         [("e8+e7", 2)], "ℝ", ([("E", 7)], 1), [(2, 1, "C")]),
    _exc("E8-2", "E8", 2, (1, 0, 0, 0, 0, 0, 0, 0),
         [("e8+e7", 2), ("e8-e7", 2)], "ℝ^2", ([("D", 7)], 1), [(2, 14, "C^14")]),
    _exc("E8-3", "E8", 3, (0, 0, 0, 0, 0, 0, 1, 0),
         [("e8+e5", 2), ("1/2(e8+e7+e6-e5+e4+e3+e2-e1)", 2), ("1/2(e8+e7+e6-e5-e4-e3-e2+e1)", 2),
          ("e8+e7", 3)],
         "ℝ^3⊕ℝ", ([("E", 6), (_A, 1)], 1), [(2, 27, "J(C)"), (3, 2, "C^2")]),
    _exc("E8-4", "E8", 3, (0, 1, 0, 0, 0, 0, 0, 0),
         [("e8-e1", 2), ("1/2(e8+e7+e6+e5+e4-e3-e2+e1)", 2), ("1/2(e8+e7+e6-e5-e4+e3+e2+e1)", 2),
          ("1/2(e8-e7-e6+e5+e4+e3+e2+e1)", 2),
          ("e8+e7", 3), ("e8+e5", 3), ("e8+e3", 3), ("e8+e1", 3)],
         "ℝ^4⊕ℝ^4", ([(_A, 7)], 1), [(2, 28, "Alt(8,C)"), (3, 8, "C^8")]),
    _exc("F4-1", "F4", 2, (0, 0, 0, 1),
         [("e1+e2", 2)], "ℝ", ([("C", 3)], 1), [(2, 1, "C")]),
    _exc("F4-2", "F4", 2, (1, 0, 0, 0),
         [("e1+e2", 2), ("e1-e2", 2)], "ℝ^2", ([("B", 3)], 1), [(2, 7, "C^7")]),
    _exc("F4-3", "F4", 3, (0, 0, 1, 0),
         [("e1+e4", 2), ("e1-e4", 2), ("e2+e3", 2), ("e1+e2", 3)],
         "ℝ^3⊕ℝ", ([(_A, 2), (_A, 1)], 1), [(2, 6, "Sym(3,C)"), (3, 2, "C^2")]),
    _exc("G2-1", "G2", 2, (0, 1),
         [("-e1-e2+2e3", 2)], "ℝ", ([(_A, 1)], 1), [(2, 1, "C")]),
    _exc("G2-2", "G2", 3, (1, 0),
         [("-e2+e3", 2), ("-e1-e2+2e3", 3)], "ℝ⊕ℝ", ([(_A, 1)], 1), [(2, 1, "C"), (3, 2, "C^2")]),
]

CASES: tuple[CaseFormula, ...] = tuple(_CASES)


def _type_key(spec: LieTypeSpec) -> str:
    return spec.family if spec.is_classical else spec.name


def cases_for(spec: LieTypeSpec) -> list[CaseFormula]:
    key = _type_key(spec)
    return [c for c in CASES if c.type_key == key]


def _diagram(spec: LieTypeSpec, labels: dict[int, int]) -> WeightedDiagram:
    vec = [0] * spec.rank
    for pos, m in labels.items():
        if not 1 <= pos <= spec.rank:
            raise CatalogError(f"label position {pos} outside rank {spec.rank}")
        vec[pos - 1] = m
    return WeightedDiagram(spec, tuple(vec))


def validate_slice(rs: RootSystem, gd, generators: list[tuple[Root, int]], expected_dim: int, where: str):
    for root, grade in generators:
        if not rs.is_positive(root):
            raise CatalogError(f"{where}: slice root not in Δ⁺: {root}")
        if root not in gd.by_degree.get(grade, ()):
            raise CatalogError(f"{where}: wrong grade for slice root {root} (claimed {grade})")
    if linalg.rank([list(r.coords) for r, _ in generators]) != len(generators):
        raise CatalogError(f"{where}: slice generators are linearly dependent")
    if len(generators) != expected_dim:
        raise CatalogError(f"{where}: slice count mismatch, {len(generators)} generators for dimension {expected_dim}")


def build_record(spec: LieTypeSpec, case: CaseFormula, p: Optional[int]) -> SphericalOrbitRecord:
    rs = build_root_system(spec)
    n = spec.n
    where = f"{spec} case {case.label}" + (f" p={p}" if p is not None else "")
    diagram = _diagram(spec, case.labels(n, p))
    ht = height(rs, diagram)
    if ht != case.height:
        raise CatalogError(f"{where}: height {ht}, expected {case.height}")
    _, gd = grading_of(rs, diagram)
    try:
        generators = case.slice(rs.ambient_dim, n, p)
    except NotARoot as exc:
        raise CatalogError(f"{where}: {exc}") from exc
    validate_slice(rs, gd, generators, case.slice_dim(n, p), where)
    levi = classify_levi(rs, diagram)
    expected = make_descriptor(*case.levi(n, p))
    if levi != expected:
        raise CatalogError(f"{where}: Levi {levi.matrix_name}, expected {expected.matrix_name}")
    summands = tuple(case.summands(n, p))
    for grade in (2, 3):
        claimed = sum(d for g, d, _ in summands if g == grade)
        if claimed != gd.dim(grade):
            raise CatalogError(f"{where}: dim g({grade}) is {gd.dim(grade)}, summands give {claimed}")
    jordan = tuple(case.jordan(n, p)) if case.jordan else None
    return SphericalOrbitRecord(
        case_label=case.label,
        spec=spec,
        p=p,
        diagram=diagram,
        height=ht,
        jordan_type=jordan,
        is_minimal=diagram.labels == minimal_diagram(spec),
        levi=levi,
        summands=summands,
        slice=SliceDescriptor(tuple(generators), case.slice_label(n, p), len(generators)),
        dim_g2=gd.dim(2),
        dim_g3=gd.dim(3),
        notes=case.notes,
    )


@lru_cache(maxsize=None)
def _enumerate(spec: LieTypeSpec) -> tuple[SphericalOrbitRecord, ...]:
    records = []
    for case in cases_for(spec):
        for p in case.params(spec.n):
            records.append(build_record(spec, case, p))
    seen = {}
    for rec in records:
        other = seen.setdefault(rec.diagram.labels, rec)
        if other is not rec:
            raise CatalogError(f"{spec}: cases {other.case_label} and {rec.case_label} share diagram {rec.diagram}")
    minimal = [r for r in records if r.is_minimal]
    if len(minimal) != 1:
        raise CatalogError(f"{spec}: {len(minimal)} minimal records")
    return tuple(records)


def enumerate_spherical(spec: LieTypeSpec) -> list[SphericalOrbitRecord]:
    return list(_enumerate(spec))


def clear_cache():
    _enumerate.cache_clear()


def lookup(spec: LieTypeSpec, wdd: WeightedDiagram) -> Optional[SphericalOrbitRecord]:
    if wdd.spec != spec:
        return None
    for rec in _enumerate(spec):
        if rec.diagram == wdd:
            return rec
    return None


def slice_roots(rec: SphericalOrbitRecord) -> SliceDescriptor:
    return rec.slice


def jordan_type(rec: SphericalOrbitRecord) -> Optional[tuple[int, ...]]:
    return rec.jordan_type


def minimal_orbit(spec: LieTypeSpec) -> SphericalOrbitRecord:
    return next(r for r in _enumerate(spec) if r.is_minimal)


def format_partition(parts: Iterable[int]) -> str:
    """``(3,2^2,1^3)`` style exponent notation."""
    out = []
    parts = list(parts)
    for part in sorted(set(parts), reverse=True):
        k = parts.count(part)
        out.append(str(part) if k == 1 else f"{part}^{k}")
    return "(" + ",".join(out) + ")"

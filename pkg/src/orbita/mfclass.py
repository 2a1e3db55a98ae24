"""Decomposition of ``n = g(2) + g(3)`` into the eight multiplicity-free families.

Dimensions alone cannot tell family (2) from family (6), so the decomposition
is looked up by case label and the fingerprint only cross-checks it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional

from .catalog import SphericalOrbitRecord
from .errors import UnmatchedFingerprint
from .grading import grading_of
from .levi import Component, LeviDescriptor, normalize_component
from .rootsys import LieTypeSpec, RootSystem


@dataclass(frozen=True)
class ActionFamily:
    id: int
    p: Optional[int]
    group_label: str
    module_label: str
    slice_label: str
    involution_label: str
    module_dim: int
    slice_dim: int
    grade_dims: tuple[tuple[int, int], ...]  # (grade, dim) pieces of n this family covers


@dataclass(frozen=True)
class ModuleFingerprint:
    levi: LeviDescriptor
    dim_g2: int
    dim_g3: int
    component_dims: tuple[tuple[int, int], ...]
    case_label: str
    spec: str
    p: Optional[int]


@dataclass(frozen=True)
class _Template:
    group: Callable[[int], str]
    module: Callable[[int], str]
    slice: Callable[[int], str]
    involution: str
    module_dim: Callable[[int], int]
    slice_dim: Callable[[int], int]
    min_p: int


def _pow(base: str, k: int) -> str:
    return base if k == 1 else f"{base}^{k}"


TEMPLATES: dict[int, _Template] = {
    1: _Template(lambda p: "C^×", lambda p: "C", lambda p: "ℝ", "σ̃₀", lambda p: 1, lambda p: 1, 0),
    2: _Template(lambda p: f"SL({p},C)", lambda p: _pow("C", p), lambda p: "T₁", "σ̃₁", lambda p: p, lambda p: 1, 2),
    3: _Template(
        lambda p: f"SL({p},C)×C^×", lambda p: f"Sym({p},C)", lambda p: f"D_{p}", "σ̃₁⊠σ̃₀",
        lambda p: p * (p + 1) // 2, lambda p: p, 2,
    ),
    4: _Template(
        lambda p: f"SL({2 * p},C)×C^×", lambda p: f"Alt({2 * p},C)", lambda p: f"A_{p}", "σ̃₁⊠σ̃₀",
        lambda p: p * (2 * p - 1), lambda p: p, 1,
    ),
    5: _Template(
        lambda p: f"SL({p},C)×SL({p},C)×C^×", lambda p: f"M({p},C)", lambda p: f"D_{p}", "σ̃₁⊠σ̃₁⊠σ̃₀",
        lambda p: p * p, lambda p: p, 2,
    ),
    6: _Template(
        lambda p: f"SO({p},C)×C^×", lambda p: _pow("C", p), lambda p: "D_{1,1}", "σ̃₂⊠σ̃₀",
        lambda p: p, lambda p: 2, 2,
    ),
    7: _Template(lambda p: "E6(C)×C^×", lambda p: "J(C)", lambda p: "D₃", "σ̃₁⊠σ̃₀", lambda p: 27, lambda p: 3, 0),
    8: _Template(
        lambda p: f"SL({2 * p},C)×C^×", lambda p: f"Alt({2 * p},C)⊕C^{2 * p}", lambda p: f"A_{p}⊕T_{p}", "σ̃₁⊠σ̃₀",
        lambda p: p * (2 * p - 1) + 2 * p, lambda p: 2 * p, 1,
    ),
}


def make_family(fid: int, p: Optional[int] = None, grades: Optional[tuple[tuple[int, int], ...]] = None) -> ActionFamily:
    """Instantiate family ``fid``; below the family's range of ``p`` a one-dimensional
    module is the ``C^×``-action on ``C``."""
    t = TEMPLATES[fid]
    q = p or 0
    if fid != 1 and q < t.min_p:
        if t.module_dim(q) != 1:
            raise UnmatchedFingerprint(f"family ({fid}) with p={p} is outside its range")
        return make_family(1, None, grades)
    dim = t.module_dim(q)
    if grades is None:
        grades = ((2, dim),)
    return ActionFamily(
        id=fid,
        p=p if fid not in (1, 7) else None,
        group_label=t.group(q),
        module_label=t.module(q),
        slice_label=t.slice(q),
        involution_label=t.involution,
        module_dim=dim,
        slice_dim=t.slice_dim(q),
        grade_dims=grades,
    )


def _height3(vector_dim: Optional[Callable[[int, int], int]]):
    """Family (8) across grades 2 and 3, plus a vector-type factor in grade 2."""

    def build(n, p):
        fams = [make_family(8, p, ((2, p * (2 * p - 1)), (3, 2 * p)))]
        if vector_dim is None:
            fams.append(make_family(1))
        else:
            fams.append(make_family(6, vector_dim(n, p)))
        return fams

    return build


def _one(fid, param=lambda n, p: p):
    return lambda n, p: [make_family(fid, param(n, p))]


REGISTRY: dict[str, Callable[[int, Optional[int]], list[ActionFamily]]] = {
    "A": _one(5),
    "A′": _one(5),
    "B1": _one(6, lambda n, p: 2 * n - 1),
    "B2": _one(4),
    "B3": _height3(lambda n, p: 2 * n - 4 * p - 1),
    "B3s": _height3(None),
    "C": _one(3),
    "C′": _one(3, lambda n, p: n),
    "D1": _one(6, lambda n, p: 2 * n - 2),
    "D2": _one(4),
    "D2′": _one(4),
    "D2″": _one(4),
    "D2‴": _one(4),
    "D3": _height3(lambda n, p: 2 * n - 4 * p - 2),
    "D3′": _height3(lambda n, p: 2),
    "E6-1": lambda n, p: [make_family(1)],
    "E6-2": lambda n, p: [make_family(6, 8)],
    "E6-3": lambda n, p: [make_family(5, 3), make_family(2, 2, ((3, 2),))],
    "E7-1": lambda n, p: [make_family(1)],
    "E7-2": lambda n, p: [make_family(6, 10)],
    "E7-3": lambda n, p: [make_family(7)],
    "E7-4": lambda n, p: [make_family(4, 3), make_family(2, 2, ((3, 2),))],
    "E7-5": lambda n, p: [make_family(8, 3, ((2, 15), (3, 6))), make_family(1)],
    "E8-1": lambda n, p: [make_family(1)],
    "E8-2": lambda n, p: [make_family(6, 14)],
    "E8-3": lambda n, p: [make_family(7), make_family(2, 2, ((3, 2),))],
    "E8-4": lambda n, p: [make_family(8, 4, ((2, 28), (3, 8)))],
    "F4-1": lambda n, p: [make_family(1)],
    "F4-2": lambda n, p: [make_family(6, 7)],
    "F4-3": lambda n, p: [make_family(3, 3), make_family(2, 2, ((3, 2),))],
    "G2-1": lambda n, p: [make_family(1)],
    "G2-2": lambda n, p: [make_family(1), make_family(2, 2, ((3, 2),))],
}


def module_fingerprint(rs: RootSystem, rec: SphericalOrbitRecord) -> ModuleFingerprint:
    gd = grading_of(rs, rec.diagram)[1]
    return ModuleFingerprint(
        levi=rec.levi,
        dim_g2=gd.dim(2),
        dim_g3=gd.dim(3),
        component_dims=tuple((g, d) for g, d, _ in rec.summands),
        case_label=rec.case_label,
        spec=rec.spec.name,
        p=rec.p,
    )


def _acting_factor(fam: ActionFamily) -> list[Component]:
    """Simple factors the family's semisimple group needs inside the Levi."""
    p = fam.p or 0
    if fam.id in (2, 3):
        return [("A", p - 1)]
    if fam.id == 5:
        return [("A", p - 1), ("A", p - 1)]
    if fam.id in (4, 8):
        return [("A", 2 * p - 1)]
    if fam.id == 6:
        if p <= 2:
            return []
        if p % 2:
            return [("B", (p - 1) // 2)]
        return [("D", p // 2)]
    if fam.id == 7:
        return [("E", 6)]
    return []


def _normalized(comps: list[Component]) -> Counter:
    out: Counter = Counter()
    for c in comps:
        out.update(normalize_component(c)[0])
    return out


def classify_action(fp: ModuleFingerprint, n: Optional[int] = None) -> list[ActionFamily]:
    """Multiplicity-free families whose direct sum is ``n`` for the fingerprinted orbit."""
    try:
        build = REGISTRY[fp.case_label]
    except KeyError:
        raise UnmatchedFingerprint(f"no decomposition registered for case {fp.case_label}") from None
    if n is None:
        n = LieTypeSpec.parse(fp.spec).n
    families = build(n, fp.p)
    per_grade: Counter = Counter()
    for fam in families:
        if sum(d for _, d in fam.grade_dims) != fam.module_dim:
            raise UnmatchedFingerprint(f"family ({fam.id}) grade split disagrees with its dimension")
        for g, d in fam.grade_dims:
            per_grade[g] += d
    if per_grade[2] != fp.dim_g2 or per_grade[3] != fp.dim_g3 or set(per_grade) - {2, 3}:
        raise UnmatchedFingerprint(
            f"{fp.spec} {fp.case_label}: families give g(2)={per_grade[2]}, g(3)={per_grade[3]}; "
            f"grading gives {fp.dim_g2}, {fp.dim_g3}"
        )
    if sorted(d for fam in families for _, d in fam.grade_dims) != sorted(d for _, d in fp.component_dims):
        raise UnmatchedFingerprint(f"{fp.spec} {fp.case_label}: family pieces do not match the case summands")
    levi = Counter(fp.levi.components)
    for fam in families:
        need = _normalized(_acting_factor(fam))
        if need - levi:
            raise UnmatchedFingerprint(
                f"{fp.spec} {fp.case_label}: family ({fam.id}) needs {dict(need)} inside {fp.levi.matrix_name}"
            )
    return families

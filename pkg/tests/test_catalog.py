from __future__ import annotations

import dataclasses
from collections import Counter

import pytest

from orbita import catalog
from orbita.catalog import (
    enumerate_spherical,
    format_partition,
    jordan_type,
    lookup,
    minimal_orbit,
    slice_roots,
    validate_slice,
)
from orbita.errors import CatalogError
from orbita.grading import WeightedDiagram, grading_of
from orbita.rootsys import LieTypeSpec, Root, build_root_system, parse_root
from orbita.verify import supported_specs

from published_tables import MINIMAL, Row, expected_rows

SPECS = [s for s in supported_specs() if s.rank >= 2 or not s.is_classical]


def spec_of(name):
    return LieTypeSpec.parse(name)


def diagrams_of(name):
    return [r.diagram.labels for r in enumerate_spherical(spec_of(name))]


def type_key(spec):
    return spec.family if spec.is_classical else spec.name


def partition_diagram(spec: LieTypeSpec, parts) -> tuple[int, ...]:
    """Weighted diagram of the classical nilpotent with Jordan type ``parts``."""
    eig = sorted((k - 1 - 2 * i for k in parts for i in range(k)), reverse=True)
    r = spec.rank
    if spec.family == "A":
        return tuple(eig[i] - eig[i + 1] for i in range(r))
    h = eig[:r]
    labels = [h[i] - h[i + 1] for i in range(r - 1)]
    last = {"B": h[-1], "C": 2 * h[-1], "D": h[-2] + h[-1]}[spec.family]
    return tuple(labels + [last])


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_regenerates_published_rows(spec):
    got = Counter(
        Row(r.diagram.labels, r.levi.components, r.levi.center_dim, r.dim_g2, r.dim_g3, r.slice.dim)
        for r in enumerate_spherical(spec)
    )
    assert got == Counter(expected_rows(type_key(spec), spec.rank))


def test_corrections_touch_only_the_flagged_fields():
    def diff(key, rank):
        printed = set(expected_rows(key, rank, corrected=False))
        fixed = set(expected_rows(key, rank, corrected=True))
        return printed - fixed, fixed - printed

    old, new = diff("A", 5)  # sl(6): the a_{2p-1} row with p=3
    assert [(r.diagram, r.center) for r in old] == [((0, 0, 2, 0, 0), 2)]
    assert [(r.diagram, r.center) for r in new] == [((0, 0, 2, 0, 0), 1)]
    old, new = diff("B", 4)
    assert [r.diagram for r in old] == [(1, 0, 0, 0)]
    assert [r.diagram for r in new] == [(2, 0, 0, 0)]
    for key, rank in [("C", 5), ("D", 6), ("D", 7)]:
        assert diff(key, rank) == (set(), set())


@pytest.mark.parametrize(
    "name,want",
    [
        ("E7", {(1, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 0, 2), (0, 0, 1, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 1)}),
        ("G2", {(0, 1), (1, 0)}),
        ("B2", {(2, 0), (0, 1)}),
        ("C2", {(1, 0), (0, 2)}),
        ("A1", {(2,)}),
        ("D4", {(2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 2), (0, 0, 2, 0), (1, 0, 1, 1)}),
    ],
)
def test_diagram_sets(name, want):
    assert set(diagrams_of(name)) == want
    assert len(diagrams_of(name)) == len(want)


def test_diagrams_outside_the_catalog():
    for name, labels in [("B5", (1, 0, 0, 1, 0)), ("A4", (1, 0, 0, 0)), ("G2", (0, 2))]:
        spec = spec_of(name)
        assert lookup(spec, WeightedDiagram(spec, labels)) is None
    spec = spec_of("A4")
    rec = lookup(spec, WeightedDiagram(spec, (0, 1, 1, 0)))
    assert (rec.case_label, rec.p) == ("A", 2)


def test_lookup_ignores_other_types():
    rec = minimal_orbit(spec_of("B3"))
    assert lookup(spec_of("C3"), rec.diagram) is None
    assert lookup(spec_of("B3"), rec.diagram) is rec


@pytest.mark.parametrize("spec", SPECS + [LieTypeSpec("A", 1)], ids=str)
def test_minimal_record(spec):
    rec = minimal_orbit(spec)
    assert rec.diagram.labels == MINIMAL[type_key(spec)](spec.rank)
    assert rec.dim_n == 1 and rec.height == 2
    assert [r for r in enumerate_spherical(spec) if r.is_minimal] == [rec]


@pytest.mark.parametrize("spec", [s for s in SPECS if s.is_classical], ids=str)
def test_jordan_type_determines_diagram(spec):
    size = {"A": spec.rank + 1, "B": 2 * spec.rank + 1, "C": 2 * spec.rank, "D": 2 * spec.rank}[spec.family]
    for rec in enumerate_spherical(spec):
        parts = jordan_type(rec)
        assert sum(parts) == size and max(parts) <= 3
        want = partition_diagram(spec, parts)
        got = rec.diagram.labels
        if spec.family == "D" and want != got:
            # very even partitions give two orbits, exchanged by the fork symmetry
            assert all(k % 2 == 0 for k in parts)
            want = want[:-2] + (want[-1], want[-2])
        assert got == want, (rec.case_label, rec.p)


def test_exceptional_records_have_no_jordan_type():
    for name in ("E6", "E7", "E8", "F4", "G2"):
        assert all(jordan_type(r) is None for r in enumerate_spherical(spec_of(name)))


def test_format_partition():
    assert format_partition((3, 2, 2, 1, 1, 1)) == "(3,2^2,1^3)"
    assert format_partition((2,)) == "(2)"


class TestSlices:
    def test_c_slice_is_long_roots(self):
        spec = spec_of("C5")
        rec = lookup(spec, WeightedDiagram(spec, (0, 0, 1, 0, 0)))
        assert [str(r) for r, _ in slice_roots(rec).generators] == ["2e1", "2e2", "2e3"]

    def test_g2_height_three_slice(self):
        spec = spec_of("G2")
        rec = lookup(spec, WeightedDiagram(spec, (1, 0)))
        gens = slice_roots(rec).generators
        assert [g for _, g in gens] == [2, 3]
        assert rec.height == 3 and rec.dim_g3 == 2

    def test_e8_height_three_slice(self):
        spec = spec_of("E8")
        rec = lookup(spec, WeightedDiagram(spec, (0, 1, 0, 0, 0, 0, 0, 0)))
        grades = Counter(g for _, g in rec.slice.generators)
        assert grades == {2: 4, 3: 4}

    def test_e8_minimal_slice_uses_highest_root(self):
        rec = minimal_orbit(spec_of("E8"))
        assert [r for r, _ in rec.slice.generators] == [parse_root("e8+e7", 8)]

    @pytest.mark.parametrize("spec", SPECS, ids=str)
    def test_every_slice_is_valid(self, spec):
        rs = build_root_system(spec)
        for rec in enumerate_spherical(spec):
            gd = grading_of(rs, rec.diagram)[1]
            validate_slice(rs, gd, list(rec.slice.generators), rec.slice.dim, rec.case_label)
            if rec.height == 2:
                assert all(g == 2 for _, g in rec.slice.generators)


class TestValidation:
    def setup_method(self):
        self.spec = spec_of("B3")
        self.rs = build_root_system(self.spec)
        self.gd = grading_of(self.rs, WeightedDiagram(self.spec, (2, 0, 0)))[1]
        self.good = [(parse_root("e1+e2", 3), 2), (parse_root("e1-e2", 3), 2)]

    def test_good_slice(self):
        validate_slice(self.rs, self.gd, self.good, 2, "B3")

    @pytest.mark.parametrize(
        "gens,dim,message",
        [
            ([(Root.of(-1, -1, 0), 2)], 1, "slice root not in Δ⁺"),
            ([(Root.of(1, 1, 0), 3)], 1, "wrong grade"),
            ([(Root.of(1, 1, 0), 2), (Root.of(1, 1, 0), 2)], 2, "linearly dependent"),
            ([(Root.of(1, 1, 0), 2)], 2, "slice count mismatch"),
        ],
    )
    def test_bad_slices(self, gens, dim, message):
        with pytest.raises(CatalogError, match=message):
            validate_slice(self.rs, self.gd, gens, dim, "B3")

    def test_bad_case_data_fails_construction(self, monkeypatch):
        spec = spec_of("G2")
        cases = list(catalog.CASES)
        i = next(k for k, c in enumerate(cases) if c.label == "G2-1")
        cases[i] = dataclasses.replace(cases[i], levi=lambda n, p: ([("A", 2)], 0))
        monkeypatch.setattr(catalog, "CASES", tuple(cases))
        catalog.clear_cache()
        try:
            with pytest.raises(CatalogError, match="Levi"):
                enumerate_spherical(spec)
        finally:
            monkeypatch.undo()
            catalog.clear_cache()
        assert len(enumerate_spherical(spec)) == 2


def test_record_fields_are_consistent():
    for spec in SPECS:
        rs = build_root_system(spec)
        for rec in enumerate_spherical(spec):
            assert rec.spec == spec
            assert sum(d for g, d, _ in rec.summands if g == 2) == rec.dim_g2
            assert sum(d for g, d, _ in rec.summands if g == 3) == rec.dim_g3
            assert (rec.dim_g3 > 0) == (rec.height == 3)
            assert rec.slice.dim == len(rec.slice.generators)
            assert rec.diagram.spec == spec and len(rec.diagram.labels) == rs.rank


def test_only_the_corrected_rows_carry_notes():
    noted = {rec.case_label for spec in SPECS for rec in enumerate_spherical(spec) if rec.notes}
    assert noted == {"A′", "B1"}

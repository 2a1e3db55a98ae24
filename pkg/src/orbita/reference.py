"""Published reference values the library is checked against by ``orbita verify``."""

from __future__ import annotations

from .rootsys import LieTypeSpec

HIGHEST_COEFFS = {
    "E6": (1, 2, 2, 3, 2, 1),
    "E7": (2, 2, 3, 4, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
    "F4": (2, 4, 3, 2),
    "G2": (3, 2),
}

MINIMAL_ORBIT_DIMS = {"E6": 22, "E7": 34, "E8": 58, "F4": 16, "G2": 6}


def root_count(spec: LieTypeSpec) -> int:
    n = spec.n
    fam = spec.family
    if fam == "A":
        return n * n - n
    if fam in "BC":
        return 2 * n * n
    if fam == "D":
        return 2 * n * n - 2 * n
    return {"E6": 72, "E7": 126, "E8": 240, "F4": 48, "G2": 12}[spec.name]


def highest_coeffs(spec: LieTypeSpec) -> tuple[int, ...]:
    r = spec.rank
    fam = spec.family
    if fam == "A":
        return (1,) * r
    if fam == "B":
        return (1,) + (2,) * (r - 1)
    if fam == "C":
        return (2,) * (r - 1) + (1,)
    if fam == "D":
        return (1,) + (2,) * (r - 3) + (1, 1)
    return HIGHEST_COEFFS[spec.name]


def minimal_diagram(spec: LieTypeSpec) -> tuple[int, ...]:
    """Weighted diagram of the minimal nilpotent orbit."""
    r = spec.rank
    fam = spec.family
    labels = [0] * r
    if fam == "A":
        if r == 1:
            return (2,)
        labels[0] = labels[-1] = 1
    elif fam in "BD":
        labels[1] = 1
    elif fam == "C":
        labels[0] = 1
    else:
        pos = {"E6": 2, "E7": 1, "E8": 8, "F4": 4, "G2": 2}[spec.name]
        labels[pos - 1] = 1
    return tuple(labels)

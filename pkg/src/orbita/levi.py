"""Type of the Levi subalgebra ``l = g(0)`` read off the degree-0 roots."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotClosed, UnrecognizedDiagram
from .grading import GradedDecomposition, WeightedDiagram, grading_of
from .rootsys import Root, RootSystem

Component = tuple[str, int]

# Simple coefficients packed as signed base-64 digits: injective for digits in
# (-32, 32), and sums of two roots stay well inside that range.
_RADIX = 64


@lru_cache(maxsize=None)
def _root_keys(rs: RootSystem) -> dict[Root, int]:
    out = {}
    for a in rs.all_roots:
        key = 0
        for c in reversed(rs.coefficients(a)):
            key = key * _RADIX + c
        out[a] = key
    return out


@lru_cache(maxsize=None)
def _all_keys(rs: RootSystem) -> frozenset[int]:
    return frozenset(_root_keys(rs).values())


@dataclass(frozen=True)
class LeviDescriptor:
    components: tuple[Component, ...]
    center_dim: int
    matrix_name: str

    @property
    def semisimple_rank(self) -> int:
        return sum(r for _, r in self.components)

    @property
    def dim(self) -> int:
        return levi_dimension(self.components, self.center_dim)


def zero_subsystem(gd: GradedDecomposition) -> frozenset[Root]:
    return frozenset(gd.by_degree.get(0, frozenset()))


def subsystem_base(rs: RootSystem, subset: Iterable[Root]) -> list[Root]:
    """Indecomposable positive roots of a closed subsystem."""
    subset = set(subset)
    keys = _root_keys(rs)
    everything = _all_keys(rs)
    for a in subset:
        if a not in keys:
            raise NotClosed(f"{a} is not a root of {rs.spec}")
    own = {keys[a] for a in subset}
    for k in own:
        if -k not in own:
            raise NotClosed("subset is not closed under negation")
    positive = [a for a in rs.positive_roots if a in subset]
    pos_keys = [keys[a] for a in positive]
    # S = -S and Delta = -Delta, so sums a+b with b positive cover every pair
    for ka in own:
        for kb in pos_keys:
            s = ka + kb
            if s in everything and s not in own:
                raise NotClosed(f"subset is not closed under root addition in {rs.spec}")
    sums = {ka + kb for i, ka in enumerate(pos_keys) for kb in pos_keys[i + 1 :]}
    return [a for a, k in zip(positive, pos_keys) if k not in sums]


def cartan_matrix(base: Sequence[Root]) -> list[list[int]]:
    """Entries ``2<a_i, a_j> / <a_j, a_j>``."""
    vecs = [a.twice() for a in base]
    norms = [sum(x * x for x in v) for v in vecs]
    out = []
    for u in vecs:
        row = []
        for v, nv in zip(vecs, norms):
            q, rem = divmod(2 * sum(x * y for x, y in zip(u, v)), nv)
            if rem:
                raise UnrecognizedDiagram("non-integral Cartan entry")
            row.append(q)
        out.append(row)
    return out


def _components(a: list[list[int]]) -> list[list[int]]:
    n = len(a)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and a[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _classify_component(a: list[list[int]], nodes: list[int]) -> Component:
    n = len(nodes)
    if n == 1:
        return ("A", 1)
    adj = {i: [j for j in nodes if j != i and a[i][j] != 0] for i in nodes}
    edges = sum(len(v) for v in adj.values()) // 2
    if edges != n - 1:
        raise UnrecognizedDiagram("Dynkin diagram contains a cycle")
    # bond multiplicity a_ij * a_ji; node i is shorter than j when |a_ij| < |a_ji|
    multi = [(i, j) for i in nodes for j in adj[i] if i < j and a[i][j] * a[j][i] > 1]
    degrees = {i: len(adj[i]) for i in nodes}
    if any(a[i][j] * a[j][i] > 3 for i, j in multi):
        raise UnrecognizedDiagram("bond of multiplicity above 3")
    if multi:
        if len(multi) > 1 or max(degrees.values()) > 2:
            raise UnrecognizedDiagram("more than one multiple bond or a branch node")
        i, j = multi[0]
        if a[i][j] * a[j][i] == 3:
            if n != 2:
                raise UnrecognizedDiagram("triple bond in a diagram with more than two nodes")
            return ("G", 2)
        if n == 2:
            return ("B", 2)
        ends = {k for k in nodes if degrees[k] == 1}
        if i in ends or j in ends:
            end, inner = (i, j) if i in ends else (j, i)
            short_end = abs(a[end][inner]) < abs(a[inner][end])
            return ("B", n) if short_end else ("C", n)
        if n == 4:
            return ("F", 4)
        raise UnrecognizedDiagram("double bond in the interior of a long chain")
    branch = [k for k in nodes if degrees[k] > 2]
    if not branch:
        return ("A", n)
    if len(branch) > 1 or degrees[branch[0]] != 3:
        raise UnrecognizedDiagram("unsupported branching")
    center = branch[0]
    arms = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while degrees[cur] == 2:
            nxt = next(k for k in adj[cur] if k != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == arms[1] == 1:
        return ("D", n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return ("E", n)
    raise UnrecognizedDiagram(f"branch arms {arms} match no Dynkin diagram")


def normalize_component(comp: Component) -> tuple[list[Component], int]:
    """Canonical representative of a low-rank alias, plus any abelian rank it contributes."""
    fam, r = comp
    if r == 0:
        return [], 0
    if fam in "BC" and r == 1:
        return [("A", 1)], 0
    if fam == "C" and r == 2:
        return [("B", 2)], 0
    if fam == "D":
        if r == 1:
            return [], 1
        if r == 2:
            return [("A", 1), ("A", 1)], 0
        if r == 3:
            return [("A", 3)], 0
    return [comp], 0


def normalize_levi(components: Iterable[Component], center_dim: int = 0) -> tuple[tuple[Component, ...], int]:
    out: list[Component] = []
    for comp in components:
        comps, extra = normalize_component(comp)
        out.extend(comps)
        center_dim += extra
    return tuple(sorted(out, key=lambda c: (-c[1], c[0]))), center_dim


def cartan_type_of(rs: RootSystem, base: Sequence[Root]) -> list[Component]:
    a = cartan_matrix(base)
    for i, row in enumerate(a):
        if row[i] != 2 or any(x > 0 for j, x in enumerate(row) if j != i):
            raise UnrecognizedDiagram("not a Cartan matrix of a simple system")
    comps = [_classify_component(a, nodes) for nodes in _components(a)]
    return list(normalize_levi(comps)[0])


_DIMS = {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}


def component_name(comp: Component) -> str:
    fam, r = comp
    if fam == "A":
        return f"sl({r + 1},C)"
    if fam == "B":
        return f"so({2 * r + 1},C)"
    if fam == "C":
        return f"sp({r},C)"
    if fam == "D":
        return f"so({2 * r},C)"
    return f"{fam.lower()}{r}(C)"


def component_dimension(comp: Component) -> int:
    fam, r = comp
    if fam == "A":
        return (r + 1) ** 2 - 1
    if fam in "BC":
        return 2 * r * r + r
    if fam == "D":
        return 2 * r * r - r
    return _DIMS[comp]


def levi_dimension(components: Iterable[Component], center_dim: int) -> int:
    return sum(component_dimension(c) for c in components) + center_dim


def levi_name(components: Sequence[Component], center_dim: int) -> str:
    parts = [component_name(c) for c in components]
    if center_dim == 1:
        parts.append("C")
    elif center_dim > 1:
        parts.append(f"C^{center_dim}")
    return " ⊕ ".join(parts) if parts else "0"


def make_descriptor(components: Iterable[Component], center_dim: int) -> LeviDescriptor:
    comps, center = normalize_levi(components, center_dim)
    return LeviDescriptor(comps, center, levi_name(comps, center))


def classify_levi(rs: RootSystem, wdd: WeightedDiagram) -> LeviDescriptor:
    gd = grading_of(rs, wdd)[1]
    comps = cartan_type_of(rs, subsystem_base(rs, zero_subsystem(gd)))
    center = rs.rank - sum(r for _, r in comps)
    desc = make_descriptor(comps, center)
    if desc.dim != gd.dim(0):
        raise UnrecognizedDiagram(f"Levi {desc.matrix_name} has dimension {desc.dim}, g(0) has {gd.dim(0)}")
    return desc


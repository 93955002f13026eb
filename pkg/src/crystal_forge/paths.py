"""Highest-weight crystals from root operators on piecewise-linear paths.

A path is a finite tuple of rational displacement vectors in weight
space, starting at the origin; only the traversed polygonal line matters,
so paths are kept in a canonical form (no zero segments, consecutive
segments pointing the same way merged).  The lowering operator for color
i looks at the height function h(t) = i-th coordinate along the path,
locates the last time t1 the minimum m is attained and the first time t2
after it with h = m+1, and reflects the directions of the piece between
t1 and t2; the raising operator mirrors this around the first minimum.
This is Littelmann's root-operator calculus; starting from the straight
dominant path it generates the highest-weight crystal.

All arithmetic is exact rational; floats never appear.  Height minima of
reachable paths must be integers, which is asserted, not assumed.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .crystal import CrystalGraph
from .dynkin import DynkinDiagram, Weight

Segment = tuple[Fraction, ...]
Path = tuple[Segment, ...]

DEFAULT_VERTEX_CAP = 200_000


class VertexCapError(RuntimeError):
    """A crystal build exceeded its vertex cap."""

    def __init__(self, diagram: DynkinDiagram, hw: Weight, cap: int):
        super().__init__(
            f"crystal for highest weight {hw} on {diagram.label} exceeded "
            f"the vertex cap of {cap}; pass a larger max_vertices to override"
        )
        self.diagram = diagram
        self.hw = hw
        self.cap = cap


def _positively_proportional(u: Segment, w: Segment) -> bool:
    k = next((j for j, c in enumerate(u) if c != 0), None)
    if k is None or w[k] == 0:
        return False
    ratio = w[k] / u[k]
    if ratio <= 0:
        return False
    return all(w[j] == ratio * u[j] for j in range(len(u)))


def canonical_path(segments) -> Path:
    """Drop zero segments and merge consecutive same-direction segments."""
    out: list[Segment] = []
    for seg in segments:
        seg = tuple(seg)
        if all(c == 0 for c in seg):
            continue
        if out and _positively_proportional(out[-1], seg):
            out[-1] = tuple(a + b for a, b in zip(out[-1], seg))
        else:
            out.append(seg)
    return tuple(out)


def path_endpoint(path: Path, rank: int) -> Weight:
    """Endpoint of the path; must land on the integer weight lattice."""
    end = [Fraction(0)] * rank
    for seg in path:
        for j, c in enumerate(seg):
            end[j] += c
    for c in end:
        if c.denominator != 1:
            raise AssertionError(f"path endpoint {tuple(end)} is not integral")
    return tuple(int(c) for c in end)


def highest_path(diagram: DynkinDiagram, hw) -> Path:
    """The straight path to a dominant weight; the source of its crystal."""
    hw = diagram.check_weight(hw)
    if not diagram.is_dominant(hw):
        raise ValueError(f"highest weight {hw} is not dominant")
    return canonical_path([tuple(Fraction(c) for c in hw)])


def _heights(path: Path, i: int) -> list[Fraction]:
    h = [Fraction(0)]
    for seg in path:
        h.append(h[-1] + seg[i])
    return h


def _min_height(h: list[Fraction]) -> Fraction:
    m = min(h)
    if m.denominator != 1:
        raise AssertionError(f"height minimum {m} is not an integer; path left the integral class")
    return m


def _reflect(diagram: DynkinDiagram, i: int, seg: Segment) -> Segment:
    alpha = diagram.simple_root(i)
    c = seg[i]
    return tuple(x - c * a for x, a in zip(seg, alpha))


def _scale(seg: Segment, c: Fraction) -> Segment:
    return tuple(c * x for x in seg)


def path_f(diagram: DynkinDiagram, i: int, path: Path) -> Path | None:
    """Lowering operator for color i, or None when the string is exhausted."""
    h = _heights(path, i)
    m = _min_height(h)
    if h[-1] - m < 1:
        return None
    target = m + 1
    k1 = max(k for k, v in enumerate(h) if v == m)
    j = k1
    while h[j + 1] < target:
        j += 1
    if h[j + 1] == target:
        mid = tuple(_reflect(diagram, i, s) for s in path[k1 : j + 1])
        new = path[:k1] + mid + path[j + 1 :]
    else:
        a = (target - h[j]) / (h[j + 1] - h[j])
        left = _scale(path[j], a)
        right = _scale(path[j], 1 - a)
        mid = tuple(_reflect(diagram, i, s) for s in path[k1:j] + (left,))
        new = path[:k1] + mid + (right,) + path[j + 1 :]
    return canonical_path(new)


def path_e(diagram: DynkinDiagram, i: int, path: Path) -> Path | None:
    """Raising operator for color i, or None when the string is exhausted."""
    h = _heights(path, i)
    m = _min_height(h)
    if -m < 1:
        return None
    target = m + 1
    k2 = min(k for k, v in enumerate(h) if v == m)
    j = k2 - 1
    while h[j] < target:
        j -= 1
    if h[j] == target:
        mid = tuple(_reflect(diagram, i, s) for s in path[j:k2])
        new = path[:j] + mid + path[k2:]
    else:
        a = (target - h[j]) / (h[j + 1] - h[j])
        left = _scale(path[j], a)
        right = _scale(path[j], 1 - a)
        mid = tuple(_reflect(diagram, i, s) for s in (right,) + path[j + 1 : k2])
        new = path[:j] + (left,) + mid + path[k2:]
    return canonical_path(new)


def build_crystal(
    diagram: DynkinDiagram, hw, max_vertices: int = DEFAULT_VERTEX_CAP
) -> CrystalGraph:
    """Close the straight dominant path under all lowering operators.

    Breadth-first; canonical paths are the vertex keys, so the vertex ids
    and edge lists are deterministic.  Raises VertexCapError when the
    crystal would exceed max_vertices.
    """
    start = highest_path(diagram, hw)
    hw = diagram.check_weight(hw)
    ids: dict[Path, int] = {start: 0}
    order: list[Path] = [start]
    f_maps: list[dict[int, int]] = [{} for _ in range(diagram.rank)]
    queue: deque[Path] = deque([start])
    while queue:
        path = queue.popleft()
        vid = ids[path]
        for i in range(diagram.rank):
            child = path_f(diagram, i, path)
            if child is None:
                continue
            cid = ids.get(child)
            if cid is None:
                if len(order) >= max_vertices:
                    raise VertexCapError(diagram, hw, max_vertices)
                cid = len(order)
                ids[child] = cid
                order.append(child)
                queue.append(child)
            f_maps[i][vid] = cid
    weights = [path_endpoint(p, diagram.rank) for p in order]
    payloads = [("path", p) for p in order]
    return CrystalGraph(diagram, weights, f_maps, payloads)

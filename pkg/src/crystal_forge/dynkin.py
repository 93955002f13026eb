"""ADE Dynkin diagrams and elementary weight arithmetic.

Weights are plain integer tuples in fundamental-weight coordinates; root
coordinates are always derived through the Cartan matrix (or its inverse)
on demand.  The vertex numbering is fixed so weight vectors are
reproducible:

* ``A_n`` is the path ``0 - 1 - ... - (n-1)``.
* ``D_n`` is the path ``0 - 1 - ... - (n-3)`` with the two fork vertices
  ``n-2`` and ``n-1`` attached to vertex ``n-3``.
* ``E_n`` is the chain ``0 - 1 - ... - (n-2)`` with the branch vertex
  ``n-1`` attached to chain vertex ``2``.

Oriented edges are ``(src, dst)`` pairs; every unordered edge occurs in
both orientations.  The orientation sign is ``+1`` on edges pointing from
the lower to the higher vertex index and ``-1`` on the reverse, so the
sign of an edge and of its reversal always cancel.
"""

from __future__ import annotations

import re
from fractions import Fraction

Weight = tuple[int, ...]

_DIAGRAM_RE = re.compile(r"^([ADE])(\d+)$")


def vadd(u: Weight, w: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, w, strict=True))


def vsub(u: Weight, w: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, w, strict=True))


def vneg(u: Weight) -> Weight:
    return tuple(-a for a in u)


def pairing(v, u) -> int:
    """Coordinatewise pairing sum(v_i * u_i) of two weight vectors."""
    if len(v) != len(u):
        raise ValueError(f"pairing of vectors of lengths {len(v)} and {len(u)}")
    return sum(a * b for a, b in zip(v, u))


def _family_edges(family: str, rank: int) -> tuple[tuple[int, int], ...]:
    if family == "A":
        if rank < 1:
            raise ValueError(f"A{rank} is not a valid diagram (need rank >= 1)")
        return tuple((k, k + 1) for k in range(rank - 1))
    if family == "D":
        if rank < 4:
            raise ValueError(f"D{rank} is not a valid diagram (need rank >= 4)")
        chain = tuple((k, k + 1) for k in range(rank - 3))
        return chain + ((rank - 3, rank - 2), (rank - 3, rank - 1))
    if family == "E":
        if rank not in (6, 7, 8):
            raise ValueError(f"E{rank} is not a valid diagram (rank must be 6, 7 or 8)")
        chain = tuple((k, k + 1) for k in range(rank - 2))
        return chain + ((2, rank - 1),)
    raise ValueError(f"unknown diagram family {family!r} (expected A, D or E)")


def _classify_component(vertices: list[int], edges: list[tuple[int, int]]) -> str:
    """Classify a connected simply-laced diagram as A_n, D_n or E_n."""
    n = len(vertices)
    if len(edges) != n - 1:
        raise ValueError("diagram component is not a tree")
    degree = {v: 0 for v in vertices}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    branch = [v for v, dg in degree.items() if dg >= 3]
    if any(degree[v] > 3 for v in vertices):
        raise ValueError("diagram has a vertex of degree > 3")
    if not branch:
        return f"A{n}"
    if len(branch) > 1:
        raise ValueError("diagram has more than one branch vertex")
    # leg lengths from the branch vertex
    adj = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    legs = []
    for start in adj[branch[0]]:
        length, prev, cur = 1, branch[0], start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return f"D{n}"
    if legs == [1, 2, 2]:
        return "E6"
    if legs == [1, 2, 3]:
        return "E7"
    if legs == [1, 2, 4]:
        return "E8"
    raise ValueError(f"diagram component with legs {legs} is not of finite ADE type")


def _classify(rank: int, edges: tuple[tuple[int, int], ...]) -> str:
    if rank == 0:
        return "0"
    adj = {v: [] for v in range(rank)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen: set[int] = set()
    labels = []
    for v in range(rank):
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            w = stack.pop()
            comp.append(w)
            for nb in adj[w]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        comp_edges = [(a, b) for a, b in edges if a in comp]
        labels.append(_classify_component(comp, comp_edges))
    return "+".join(labels)


class DynkinDiagram:
    """An ADE diagram (possibly a disjoint union of ADE components).

    Carries the Cartan matrix ``A``, the adjacency matrix ``X = 2*Id - A``
    and the doubled oriented edge set.  Instances are immutable and
    hashable; two diagrams compare equal iff they have the same vertex
    count and edge set.
    """

    def __init__(self, rank: int, edges: tuple[tuple[int, int], ...], label: str | None = None):
        edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        for a, b in edges:
            if not (0 <= a < rank and 0 <= b < rank and a != b):
                raise ValueError(f"edge {(a, b)} out of range for rank {rank}")
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edges")
        self.rank = rank
        self.edges = edges
        self.label = label if label is not None else _classify(rank, edges)
        adj = [[0] * rank for _ in range(rank)]
        for a, b in edges:
            adj[a][b] = adj[b][a] = 1
        self.cartan: tuple[Weight, ...] = tuple(
            tuple(2 if i == j else -adj[i][j] for j in range(rank)) for i in range(rank)
        )
        self.x_matrix: tuple[Weight, ...] = tuple(
            tuple(adj[i][j] for j in range(rank)) for i in range(rank)
        )
        self.oriented_edges: tuple[tuple[int, int], ...] = tuple(
            sorted([(a, b) for a, b in edges] + [(b, a) for a, b in edges])
        )
        self._neighbors: tuple[tuple[int, ...], ...] = tuple(
            tuple(j for j in range(rank) if adj[i][j]) for i in range(rank)
        )
        self._inv_cartan: tuple[tuple[Fraction, ...], ...] | None = None
        self._positive_roots: tuple[Weight, ...] | None = None

    # -- identity ---------------------------------------------------------

    @property
    def key(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        return (self.rank, self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, DynkinDiagram) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"DynkinDiagram({self.label})"

    # -- oriented edges ---------------------------------------------------

    @staticmethod
    def edge_out(h: tuple[int, int]) -> int:
        return h[0]

    @staticmethod
    def edge_in(h: tuple[int, int]) -> int:
        return h[1]

    @staticmethod
    def reversed_edge(h: tuple[int, int]) -> tuple[int, int]:
        return (h[1], h[0])

    @staticmethod
    def orientation_sign(h: tuple[int, int]) -> int:
        """+1 on the canonical (low -> high) orientation, -1 on the reverse."""
        return 1 if h[0] < h[1] else -1

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self._neighbors[i]

    # -- weight arithmetic --------------------------------------------------

    def check_weight(self, w) -> Weight:
        w = tuple(int(c) for c in w)
        if len(w) != self.rank:
            raise ValueError(f"weight {w} has length {len(w)}, diagram rank is {self.rank}")
        return w

    def simple_root(self, i: int) -> Weight:
        """Column i of the Cartan matrix: the simple root in weight coordinates."""
        return tuple(self.cartan[j][i] for j in range(self.rank))

    def weyl_reflect(self, i: int, w) -> Weight:
        w = self.check_weight(w)
        c = w[i]
        return tuple(w[j] - c * self.cartan[j][i] for j in range(self.rank))

    def is_dominant(self, w) -> bool:
        return all(c >= 0 for c in self.check_weight(w))

    def apply_cartan(self, v) -> Weight:
        v = tuple(v)
        return tuple(sum(self.cartan[i][j] * v[j] for j in range(self.rank)) for i in range(self.rank))

    def apply_x(self, v) -> Weight:
        v = tuple(v)
        return tuple(sum(self.x_matrix[i][j] * v[j] for j in range(self.rank)) for i in range(self.rank))

    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        if self._inv_cartan is None:
            n = self.rank
            aug = [
                [Fraction(self.cartan[i][j]) for j in range(n)]
                + [Fraction(1 if j == i else 0) for j in range(n)]
                for i in range(n)
            ]
            for col in range(n):
                piv = next(r for r in range(col, n) if aug[r][col] != 0)
                aug[col], aug[piv] = aug[piv], aug[col]
                inv = 1 / aug[col][col]
                aug[col] = [x * inv for x in aug[col]]
                for r in range(n):
                    if r != col and aug[r][col] != 0:
                        f = aug[r][col]
                        aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
            self._inv_cartan = tuple(tuple(row[n:]) for row in aug)
        return self._inv_cartan

    def solve_cartan(self, rhs) -> tuple[Fraction, ...]:
        """The unique rational solution v of A v = rhs."""
        inv = self.inverse_cartan()
        rhs = tuple(rhs)
        return tuple(sum(inv[i][j] * rhs[j] for j in range(self.rank)) for i in range(self.rank))

    # -- root system ---------------------------------------------------------

    def positive_roots(self) -> tuple[Weight, ...]:
        """All positive roots, in root coordinates (integer tuples)."""
        if self._positive_roots is None:
            simples = [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]
            seen = set(simples)
            queue = list(simples)
            while queue:
                r = queue.pop()
                fund = self.apply_cartan(r)
                for i in range(self.rank):
                    s = list(r)
                    s[i] -= fund[i]
                    s = tuple(s)
                    if s not in seen:
                        seen.add(s)
                        queue.append(s)
            self._positive_roots = tuple(sorted(r for r in seen if all(c >= 0 for c in r)))
        return self._positive_roots

    def weyl_dimension(self, hw) -> int:
        """Dimension of the irreducible highest-weight module with highest weight hw."""
        hw = self.check_weight(hw)
        if not self.is_dominant(hw):
            raise ValueError(f"weight {hw} is not dominant")
        num, den = 1, 1
        for root in self.positive_roots():
            num *= sum((hw[j] + 1) * root[j] for j in range(self.rank))
            den *= sum(root)
        q, r = divmod(num, den)
        if r:
            raise AssertionError("Weyl dimension did not come out integral")
        return q


def dynkin(family: str, rank: int) -> DynkinDiagram:
    """Build the standard ADE diagram of the given family and rank."""
    family = family.upper()
    return DynkinDiagram(rank, _family_edges(family, rank), f"{family}{rank}")


def parse_diagram(text: str) -> DynkinDiagram:
    """Parse a diagram name such as "A2", "D4" or "E6"."""
    m = _DIAGRAM_RE.match(text.strip().upper())
    if not m:
        raise ValueError(f"cannot parse diagram name {text!r} (expected e.g. A2, D4, E6)")
    return dynkin(m.group(1), int(m.group(2)))


def induced_subdiagram(diagram: DynkinDiagram, keep) -> tuple[DynkinDiagram, tuple[int, ...]]:
    """Full subdiagram on the given vertices.

    Returns the subdiagram (vertices relabelled 0..k-1 in increasing order
    of the original indices) together with the tuple of original indices.
    """
    keep = tuple(sorted(set(int(v) for v in keep)))
    for v in keep:
        if not 0 <= v < diagram.rank:
            raise ValueError(f"vertex {v} out of range for {diagram.label}")
    pos = {v: k for k, v in enumerate(keep)}
    sub_edges = tuple(
        (pos[a], pos[b]) for a, b in diagram.edges if a in pos and b in pos
    )
    return DynkinDiagram(len(keep), sub_edges), keep

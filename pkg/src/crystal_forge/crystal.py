"""Finite normal crystals as colored graphs.

A crystal is stored as a vertex list with integer weights plus, for every
color i, the partial lowering map f_i as a dict; the raising map e_i is
always the inverse dict.  String lengths eps/phi are never stored: they
are recomputed from the maps, which is what normality means.

The tensor product follows Kashiwara's signature rule: operators act on
the left factor when phi(left) beats eps(right), otherwise on the right,
with strict/non-strict comparison split between f and e exactly as in the
standard convention.
"""

from __future__ import annotations

from collections import Counter, deque

from .dynkin import DynkinDiagram, Weight, vadd, vsub

SCHEMA = "crystal-forge/1"

# DOT edge palette, indexed by color (vertex index) modulo the list length.
DOT_COLORS = (
    "red",
    "blue",
    "forestgreen",
    "orange",
    "purple",
    "brown",
    "cyan4",
    "magenta3",
)


class CrystalGraph:
    """Immutable colored graph with weights and mutually inverse f_i / e_i."""

    def __init__(self, diagram: DynkinDiagram, weights, f_maps, payloads=None):
        self.diagram = diagram
        self.weights: tuple[Weight, ...] = tuple(tuple(w) for w in weights)
        f_maps = [dict(m) for m in f_maps]
        if len(f_maps) != diagram.rank:
            raise ValueError(f"expected {diagram.rank} colored maps, got {len(f_maps)}")
        self.f_maps: tuple[dict[int, int], ...] = tuple(f_maps)
        self.e_maps: tuple[dict[int, int], ...] = tuple(
            {b: a for a, b in m.items()} for m in f_maps
        )
        self.payloads = tuple(payloads) if payloads is not None else None
        self._eps: list[list[int]] | None = None
        self._phi: list[list[int]] | None = None

    # -- basics -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.weights)

    def cardinality(self) -> int:
        return len(self.weights)

    def weight(self, v: int) -> Weight:
        return self.weights[v]

    def f(self, i: int, v: int) -> int | None:
        return self.f_maps[i].get(v)

    def e(self, i: int, v: int) -> int | None:
        return self.e_maps[i].get(v)

    def character(self) -> Counter:
        """Multiset of vertex weights."""
        return Counter(self.weights)

    def is_source(self, v: int) -> bool:
        """True when every raising operator is undefined on v."""
        return all(v not in em for em in self.e_maps)

    # -- string lengths -----------------------------------------------------

    def _string_data(self) -> tuple[list[list[int]], list[list[int]]]:
        if self._eps is None:
            n = len(self.weights)
            eps = [[0] * n for _ in range(self.diagram.rank)]
            phi = [[0] * n for _ in range(self.diagram.rank)]
            for i in range(self.diagram.rank):
                fm, em = self.f_maps[i], self.e_maps[i]
                for v in range(n):
                    if v in em:
                        continue  # not a chain start
                    chain = [v]
                    while chain[-1] in fm:
                        chain.append(fm[chain[-1]])
                    top = len(chain) - 1
                    for k, w in enumerate(chain):
                        eps[i][w] = k
                        phi[i][w] = top - k
            self._eps, self._phi = eps, phi
        return self._eps, self._phi

    def epsilon(self, v: int, i: int) -> int:
        """Number of times e_i applies to v."""
        return self._string_data()[0][i][v]

    def phi(self, v: int, i: int) -> int:
        """Number of times f_i applies to v."""
        return self._string_data()[1][i][v]

    # -- export -------------------------------------------------------------

    def to_json_dict(self) -> dict:
        vertices = []
        for v, w in enumerate(self.weights):
            entry: dict = {"id": v, "wt": list(w)}
            payload = self.payloads[v] if self.payloads is not None else None
            if payload is not None:
                entry["payload"] = _payload_json(payload)
            vertices.append(entry)
        edges = [
            {"color": i, "from": a, "to": b}
            for i in range(self.diagram.rank)
            for a, b in sorted(self.f_maps[i].items())
        ]
        return {
            "schema": SCHEMA,
            "diagram": self.diagram.label,
            "vertices": vertices,
            "edges": edges,
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  rankdir=TB;"]
        for v, w in enumerate(self.weights):
            label = ",".join(str(c) for c in w)
            lines.append(f'  "{v}" [label="({label})"];')
        for i in range(self.diagram.rank):
            color = DOT_COLORS[i % len(DOT_COLORS)]
            for a, b in sorted(self.f_maps[i].items()):
                lines.append(f'  "{a}" -> "{b}" [color={color}, label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _payload_json(payload):
    kind = payload[0]
    if kind == "path":
        return {
            "path": [
                [[c.numerator, c.denominator] for c in seg] for seg in payload[1]
            ]
        }
    if kind == "pair":
        return {"pair": [payload[1], payload[2]]}
    if kind == "sl2":
        return {"sl2": list(payload[1:])}
    return {"label": repr(payload)}


def trivial_crystal(diagram: DynkinDiagram, n: int) -> CrystalGraph:
    """n isolated vertices of weight zero with all operators undefined."""
    zero = (0,) * diagram.rank
    return CrystalGraph(diagram, [zero] * n, [{} for _ in range(diagram.rank)])


def direct_sum(crystals, diagram: DynkinDiagram | None = None) -> CrystalGraph:
    """Disjoint union; the empty sum needs an explicit diagram."""
    crystals = list(crystals)
    if not crystals:
        if diagram is None:
            raise ValueError("empty direct sum needs an explicit diagram")
        return CrystalGraph(diagram, [], [{} for _ in range(diagram.rank)])
    diagram = crystals[0].diagram
    for c in crystals[1:]:
        if c.diagram != diagram:
            raise ValueError("direct sum of crystals over different diagrams")
    weights: list[Weight] = []
    f_maps: list[dict[int, int]] = [{} for _ in range(diagram.rank)]
    payloads: list = []
    have_payloads = all(c.payloads is not None for c in crystals)
    offset = 0
    for c in crystals:
        weights.extend(c.weights)
        for i in range(diagram.rank):
            for a, b in c.f_maps[i].items():
                f_maps[i][a + offset] = b + offset
        if have_payloads:
            payloads.extend(c.payloads)
        offset += len(c)
    return CrystalGraph(diagram, weights, f_maps, payloads if have_payloads else None)


def tensor(left: CrystalGraph, right: CrystalGraph) -> CrystalGraph:
    """Tensor product on the product vertex set, signature rule per color.

    Vertex (a, b) gets the dense id a*|right| + b; the payload records the
    factor pair.
    """
    if left.diagram != right.diagram:
        raise ValueError("tensor product of crystals over different diagrams")
    diagram = left.diagram
    nr = len(right)
    weights = [vadd(wa, wb) for wa in left.weights for wb in right.weights]
    f_maps: list[dict[int, int]] = [{} for _ in range(diagram.rank)]
    for i in range(diagram.rank):
        fm = f_maps[i]
        f_left, f_right = left.f_maps[i], right.f_maps[i]
        for a in range(len(left)):
            phi_a = left.phi(a, i)
            base = a * nr
            for b in range(nr):
                if phi_a > right.epsilon(b, i):
                    fa = f_left.get(a)
                    if fa is not None:
                        fm[base + b] = fa * nr + b
                else:
                    fb = f_right.get(b)
                    if fb is not None:
                        fm[base + b] = base + fb
    payloads = [("pair", a, b) for a in range(len(left)) for b in range(nr)]
    return CrystalGraph(diagram, weights, f_maps, payloads)


def tensor_many(crystals) -> CrystalGraph:
    """Left-nested tensor product of one or more crystals."""
    crystals = list(crystals)
    if not crystals:
        raise ValueError("tensor product of an empty list")
    out = crystals[0]
    for c in crystals[1:]:
        out = tensor(out, c)
    return out


def verify_axioms(crystal: CrystalGraph) -> list[str]:
    """Check every crystal axiom on every vertex and color.

    Returns a list of human-readable violations; an empty list means the
    graph is a normal crystal.
    """
    diagram = crystal.diagram
    n = len(crystal)
    violations: list[str] = []
    for v, w in enumerate(crystal.weights):
        if len(w) != diagram.rank:
            violations.append(f"vertex {v}: weight length {len(w)} != rank {diagram.rank}")
    if violations:
        return violations

    for i in range(diagram.rank):
        fm = crystal.f_maps[i]
        targets = Counter(fm.values())
        for tgt, cnt in targets.items():
            if cnt > 1:
                violations.append(f"color {i}: f is not injective at target vertex {tgt}")
        alpha = diagram.simple_root(i)
        for a, b in fm.items():
            if not (0 <= b < n):
                violations.append(f"color {i}: f({a}) = {b} is not a vertex")
                continue
            if vsub(crystal.weights[a], crystal.weights[b]) != alpha:
                violations.append(
                    f"vertex {a}, color {i}: wt(f a) != wt(a) - simple_root({i})"
                )
        # finite chains: walking f from any vertex must terminate
        for a in fm:
            seen = {a}
            cur = a
            while cur in fm:
                cur = fm[cur]
                if cur in seen:
                    violations.append(f"color {i}: f-cycle through vertex {a}")
                    break
                seen.add(cur)
    if violations:
        return violations

    for v in range(n):
        for i in range(diagram.rank):
            if crystal.weights[v][i] != crystal.phi(v, i) - crystal.epsilon(v, i):
                violations.append(
                    f"vertex {v}, color {i}: wt_i != phi - epsilon (normality)"
                )
    return violations


def _connected_components(crystal: CrystalGraph) -> list[list[int]]:
    """Components under all colored edges, ordered by smallest vertex id."""
    n = len(crystal)
    adj: list[list[int]] = [[] for _ in range(n)]
    for fm in crystal.f_maps:
        for a, b in fm.items():
            adj[a].append(b)
            adj[b].append(a)
    seen = [False] * n
    comps: list[list[int]] = []
    for v in range(n):
        if seen[v]:
            continue
        comp = [v]
        seen[v] = True
        queue = deque([v])
        while queue:
            w = queue.popleft()
            for nb in adj[w]:
                if not seen[nb]:
                    seen[nb] = True
                    comp.append(nb)
                    queue.append(nb)
        comps.append(sorted(comp))
    return comps


def _pair_from_sources(a: CrystalGraph, b: CrystalGraph, src_a: int, src_b: int) -> dict[int, int] | None:
    """Pair vertices of two connected crystals by parallel traversal.

    Starting from the two sources, walk every f_i and e_i in lockstep;
    definedness and weights must match throughout.  Returns the bijection
    or None.
    """
    if a.weights[src_a] != b.weights[src_b]:
        return None
    fwd = {src_a: src_b}
    bwd = {src_b: src_a}
    queue = deque([src_a])
    while queue:
        va = queue.popleft()
        vb = fwd[va]
        for i in range(a.diagram.rank):
            for map_a, map_b in ((a.f_maps[i], b.f_maps[i]), (a.e_maps[i], b.e_maps[i])):
                ta = map_a.get(va)
                tb = map_b.get(vb)
                if (ta is None) != (tb is None):
                    return None
                if ta is None:
                    continue
                known = fwd.get(ta)
                if known is not None:
                    if known != tb:
                        return None
                    continue
                if tb in bwd:
                    return None
                if a.weights[ta] != b.weights[tb]:
                    return None
                fwd[ta] = tb
                bwd[tb] = ta
                queue.append(ta)
    return fwd


def _component_sources(crystal: CrystalGraph, comp: list[int]) -> list[int]:
    return [v for v in comp if crystal.is_source(v)]


def is_isomorphic(a: CrystalGraph, b: CrystalGraph) -> dict[int, int] | None:
    """Crystal isomorphism as a vertex map, or None.

    Every connected component of both inputs must have a unique source
    vertex (all raising operators undefined); this always holds for the
    highest-weight crystals built here.  Components are matched greedily.
    """
    if a.diagram != b.diagram or len(a) != len(b):
        return None
    comps_a = _connected_components(a)
    comps_b = _connected_components(b)
    if len(comps_a) != len(comps_b):
        return None
    pairs_a = []
    for comp in comps_a:
        srcs = _component_sources(a, comp)
        if len(srcs) != 1:
            raise ValueError(
                f"component containing vertex {comp[0]} has {len(srcs)} sources; "
                "isomorphism search needs a unique source per component"
            )
        pairs_a.append((comp, srcs[0]))
    pairs_b = []
    for comp in comps_b:
        srcs = _component_sources(b, comp)
        if len(srcs) != 1:
            raise ValueError(
                f"component containing vertex {comp[0]} has {len(srcs)} sources; "
                "isomorphism search needs a unique source per component"
            )
        pairs_b.append((comp, srcs[0]))

    used = [False] * len(pairs_b)
    total: dict[int, int] = {}
    for comp_a, src_a in pairs_a:
        matched = False
        for k, (comp_b, src_b) in enumerate(pairs_b):
            if used[k] or len(comp_b) != len(comp_a):
                continue
            m = _pair_from_sources(a, b, src_a, src_b)
            if m is not None and len(m) == len(comp_a):
                used[k] = True
                total.update(m)
                matched = True
                break
        if not matched:
            return None
    return total

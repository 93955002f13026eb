"""Exact checks on explicit ADHM data.

An ADHM datum on graded spaces (D, V) is a triple (x, p, q): one rational
matrix per oriented edge, and framing maps p: D -> V, q: V -> D per
vertex.  The moment-map equation, with the orientation sign fixed by the
diagram, reads per vertex i:

    sum over edges h into i of  sign(h) * x_h * x_hbar  =  p_i * q_i.

Everything is rational and exact: stability, nilpotency and stratum
membership are discrete questions and are answered by ranks of exact
matrices, never by thresholds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .dynkin import DynkinDiagram, Weight, parse_diagram
from .linalg import (
    Mat,
    column_space,
    contains,
    full_space,
    image_of,
    intersect,
    kernel,
    mat,
    matmul,
    matneg,
    preimage,
    subspace_sum,
    zero_space,
    zeros,
)

GradedSubspace = tuple[Mat, ...]


def _space_dims(spaces: GradedSubspace) -> Weight:
    return tuple(s.cols for s in spaces)


def zero_graded(dims) -> GradedSubspace:
    return tuple(zero_space(n) for n in dims)


def full_graded(dims) -> GradedSubspace:
    return tuple(full_space(n) for n in dims)


@dataclass(frozen=True)
class ADHMDatum:
    """Explicit rational ADHM datum on graded spaces of dimensions d and v."""

    diagram: DynkinDiagram
    d: Weight
    v: Weight
    x: dict[tuple[int, int], Mat]
    p: tuple[Mat, ...]
    q: tuple[Mat, ...]

    def __post_init__(self):
        diagram = self.diagram
        object.__setattr__(self, "d", diagram.check_weight(self.d))
        object.__setattr__(self, "v", diagram.check_weight(self.v))
        oriented = set(diagram.oriented_edges)
        for h, m in self.x.items():
            if h not in oriented:
                raise ValueError(f"{h} is not an oriented edge of {diagram.label}")
            src, dst = h
            if (m.rows, m.cols) != (self.v[dst], self.v[src]):
                raise ValueError(
                    f"x{h} has shape {m.rows}x{m.cols}, expected "
                    f"{self.v[dst]}x{self.v[src]}"
                )
        if len(self.p) != diagram.rank or len(self.q) != diagram.rank:
            raise ValueError("p and q need one matrix per vertex")
        for i in range(diagram.rank):
            if (self.p[i].rows, self.p[i].cols) != (self.v[i], self.d[i]):
                raise ValueError(f"p[{i}] has the wrong shape")
            if (self.q[i].rows, self.q[i].cols) != (self.d[i], self.v[i]):
                raise ValueError(f"q[{i}] has the wrong shape")

    def x_map(self, h: tuple[int, int]) -> Mat:
        m = self.x.get(h)
        if m is None:
            src, dst = h
            m = zeros(self.v[dst], self.v[src])
        return m


def preprojective_residual(datum: ADHMDatum) -> tuple[Mat, ...]:
    """Per-vertex value of the moment-map expression; zero means satisfied."""
    diagram = datum.diagram
    out = []
    for i in range(diagram.rank):
        acc = matneg(matmul(datum.p[i], datum.q[i]))
        for j in diagram.neighbors(i):
            h = (j, i)
            sign = diagram.orientation_sign(h)
            term = matmul(datum.x_map(h), datum.x_map((i, j)))
            if sign < 0:
                term = matneg(term)
            acc = _madd(acc, term)
        out.append(acc)
    return tuple(out)


def _madd(a: Mat, b: Mat) -> Mat:
    return Mat(
        a.rows,
        a.cols,
        tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.data, b.data)),
    )


def check_preprojective(datum: ADHMDatum) -> bool:
    """Whether the moment-map equation holds exactly at every vertex."""
    return all(m.is_zero() for m in preprojective_residual(datum))


def closure(datum: ADHMDatum, spaces: GradedSubspace) -> GradedSubspace:
    """Smallest x-invariant graded subspace containing the given one."""
    diagram = datum.diagram
    cur = tuple(column_space(s) for s in spaces)
    while True:
        nxt = list(cur)
        for src, dst in diagram.oriented_edges:
            img = image_of(datum.x_map((src, dst)), cur[src])
            nxt[dst] = subspace_sum(nxt[dst], img)
        nxt = tuple(nxt)
        if nxt == cur:
            return cur
        cur = nxt


def core(datum: ADHMDatum, spaces: GradedSubspace) -> GradedSubspace:
    """Largest x-invariant graded subspace contained in the given one."""
    diagram = datum.diagram
    cur = tuple(column_space(s) for s in spaces)
    while True:
        nxt = list(cur)
        for src in range(diagram.rank):
            piece = nxt[src]
            for dst in diagram.neighbors(src):
                piece = intersect(piece, preimage(datum.x_map((src, dst)), cur[dst]))
            nxt[src] = piece
        nxt = tuple(nxt)
        if nxt == cur:
            return cur
        cur = nxt


def image_of_p(datum: ADHMDatum) -> GradedSubspace:
    return tuple(column_space(m) for m in datum.p)


def kernel_of_q(datum: ADHMDatum) -> GradedSubspace:
    return tuple(column_space(kernel(m)) for m in datum.q)


def is_stable(datum: ADHMDatum) -> bool:
    """Whether the closure of the image of p is all of V."""
    return _space_dims(closure(datum, image_of_p(datum))) == datum.v


def is_ast_stable(datum: ADHMDatum) -> bool:
    """Whether the core of the kernel of q is zero."""
    return all(c == 0 for c in _space_dims(core(datum, kernel_of_q(datum))))


def is_nilpotent(datum: ADHMDatum) -> bool:
    """Whether every edge-matrix product of length |dim V| vanishes.

    Iterates the sum-of-images operator from the full space; the sequence
    is decreasing, so stabilizing anywhere above zero means a product of
    arbitrary length survives.
    """
    diagram = datum.diagram
    cur = full_graded(datum.v)
    steps = sum(datum.v)
    for _ in range(steps):
        nxt = list(zero_graded(datum.v))
        for src, dst in diagram.oriented_edges:
            img = image_of(datum.x_map((src, dst)), cur[src])
            nxt[dst] = subspace_sum(nxt[dst], img)
        nxt = tuple(nxt)
        if all(c == 0 for c in _space_dims(nxt)):
            return True
        if nxt == cur:
            return False
        cur = nxt
    return all(c == 0 for c in _space_dims(cur))


@dataclass(frozen=True)
class GradedFlag:
    """Increasing chain of graded subspaces of D, ending at the full space."""

    diagram: DynkinDiagram
    d: Weight
    steps: tuple[GradedSubspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", self.diagram.check_weight(self.d))
        steps = tuple(
            tuple(column_space(s) for s in step) for step in self.steps
        )
        object.__setattr__(self, "steps", steps)
        if not steps:
            raise ValueError("a flag needs at least one step")
        prev = zero_graded(self.d)
        for k, step in enumerate(steps):
            if tuple(s.rows for s in step) != self.d:
                raise ValueError(f"flag step {k} lives in the wrong ambient space")
            for i in range(self.diagram.rank):
                if not contains(step[i], prev[i]):
                    raise ValueError(f"flag step {k} does not contain step {k - 1}")
            prev = step
        if _space_dims(steps[-1]) != self.d:
            raise ValueError("the last flag step must be the full space")

    @property
    def n(self) -> int:
        return len(self.steps)

    def step_dims(self) -> tuple[Weight, ...]:
        """Graded dimensions of the subquotients of consecutive steps."""
        out = []
        prev = (0,) * len(self.d)
        for step in self.steps:
            cur = _space_dims(step)
            out.append(tuple(a - b for a, b in zip(cur, prev)))
            prev = cur
        return tuple(out)


def stratum_membership(
    datum: ADHMDatum, flag: GradedFlag
) -> tuple[tuple[Weight, ...], tuple[Weight, ...]] | None:
    """Check the submodule chain condition and read off the stratum label.

    For each flag step, the closure of p(step) must sit inside the core of
    q^{-1}(step); when it does, the label is the pair of dimension tuples
    of the two subquotient chains.  Requires a stable datum.
    """
    if datum.diagram != flag.diagram or datum.d != flag.d:
        raise ValueError("flag and datum live on different framing spaces")
    if not is_stable(datum):
        raise ValueError("stratum membership is defined for stable data only")
    diagram = datum.diagram
    closures = [closure(datum, tuple(image_of(datum.p[i], flag.steps[k][i]) for i in range(diagram.rank)))
                for k in range(flag.n)]
    cores = [core(datum, tuple(preimage(datum.q[i], flag.steps[k][i]) for i in range(diagram.rank)))
             for k in range(flag.n)]
    for k in range(flag.n):
        for i in range(diagram.rank):
            if not contains(cores[k][i], closures[k][i]):
                return None
    kernel_core = core(datum, kernel_of_q(datum))
    v_tuple = []
    vt_tuple = []
    prev_closure_dims = (0,) * diagram.rank
    for k in range(flag.n):
        lower = kernel_core if k == 0 else cores[k - 1]
        meet_dims = _space_dims(
            tuple(intersect(closures[k][i], lower[i]) for i in range(diagram.rank))
        )
        cl_dims = _space_dims(closures[k])
        v_tuple.append(tuple(a - b for a, b in zip(cl_dims, meet_dims)))
        vt_tuple.append(tuple(a - b for a, b in zip(meet_dims, prev_closure_dims)))
        prev_closure_dims = cl_dims
    return tuple(v_tuple), tuple(vt_tuple)


# -- random preprojective data -----------------------------------------------


def random_preprojective(
    diagram: DynkinDiagram, v, d, rng: Random | int | None = None
) -> ADHMDatum:
    """Sample a datum satisfying the moment-map equation exactly.

    The matrices on the canonical orientation and q are drawn with small
    integer entries; the reversed-orientation matrices and p then satisfy
    a linear system, and a random solution is taken.  This is a sampling
    heuristic, not a uniform measure on the variety.
    """
    if rng is None or isinstance(rng, int):
        rng = Random(rng)
    v = diagram.check_weight(v)
    d = diagram.check_weight(d)
    canonical = [(a, b) for a, b in diagram.oriented_edges if a < b]

    for _ in range(20):
        x_known = {
            h: mat(
                [[rng.randint(-2, 2) for _ in range(v[h[0]])] for _ in range(v[h[1]])],
                rows=v[h[1]],
                cols=v[h[0]],
            )
            for h in canonical
        }
        q = tuple(
            mat(
                [[rng.randint(-2, 2) for _ in range(v[i])] for _ in range(d[i])],
                rows=d[i],
                cols=v[i],
            )
            for i in range(diagram.rank)
        )

        # unknown layout: one block per reversed edge, then one per p_i
        blocks: dict[tuple, int] = {}
        size = 0
        for s, t in canonical:
            blocks[("x", (t, s))] = size
            size += v[s] * v[t]  # shape v[s] x v[t]
        for i in range(diagram.rank):
            blocks[("p", i)] = size
            size += v[i] * d[i]  # shape v[i] x d[i]

        rows: list[list[Fraction]] = []
        for i in range(diagram.rank):
            for r in range(v[i]):
                for c in range(v[i]):
                    row = [Fraction(0)] * size
                    for j in diagram.neighbors(i):
                        if j < i:
                            # canonical edge (j, i): known x * unknown reverse
                            known = x_known[(j, i)]
                            base = blocks[("x", (i, j))]
                            for k in range(v[j]):
                                row[base + k * v[i] + c] += known.data[r][k]
                        else:
                            # reversed edge (j, i): unknown x * known reverse
                            known = x_known[(i, j)]
                            base = blocks[("x", (j, i))]
                            for k in range(v[j]):
                                row[base + r * v[j] + k] -= known.data[k][c]
                    base = blocks[("p", i)]
                    for k in range(d[i]):
                        row[base + r * d[i] + k] -= q[i].data[k][c]
                    rows.append(row)

        system = mat(rows, rows=len(rows), cols=size)
        null = kernel(system)
        sol = [Fraction(0)] * size
        for col in range(null.cols):
            coeff = rng.randint(-3, 3)
            if coeff:
                for r in range(size):
                    sol[r] += coeff * null.data[r][col]

        x_all = dict(x_known)
        for s, t in canonical:
            base = blocks[("x", (t, s))]
            x_all[(t, s)] = mat(
                [[sol[base + r * v[t] + c] for c in range(v[t])] for r in range(v[s])],
                rows=v[s],
                cols=v[t],
            )
        p = tuple(
            mat(
                [
                    [sol[blocks[("p", i)] + r * d[i] + c] for c in range(d[i])]
                    for r in range(v[i])
                ],
                rows=v[i],
                cols=d[i],
            )
            for i in range(diagram.rank)
        )
        datum = ADHMDatum(diagram, d, v, x_all, p, q)
        if not check_preprojective(datum):
            raise AssertionError("solved datum fails the moment-map equation")
        nontrivial = any(not m.is_zero() for m in x_all.values()) or any(
            not m.is_zero() for m in p
        )
        if nontrivial or size == 0:
            return datum
    return datum


# -- JSON interchange ---------------------------------------------------------


def _mat_from_json(rows_data, rows: int, cols: int) -> Mat:
    entries = [
        [Fraction(int(num), int(den)) for num, den in row] for row in rows_data
    ]
    return mat(entries, rows=rows, cols=cols)


def datum_from_json(payload: dict) -> tuple[ADHMDatum, GradedFlag | None]:
    """Parse a datum (and optional flag) from the JSON interchange format.

    Matrices are arrays of rows whose entries are [numerator, denominator]
    pairs; edge matrices are keyed "src->dst", and the optional flag is a
    list of steps, each a per-vertex list of spanning vectors in D.
    """
    diagram = parse_diagram(payload["diagram"])
    v = diagram.check_weight(payload["v"])
    d = diagram.check_weight(payload["d"])
    x = {}
    for key, rows_data in payload.get("x", {}).items():
        src_s, dst_s = key.split("->")
        h = (int(src_s), int(dst_s))
        x[h] = _mat_from_json(rows_data, rows=v[h[1]], cols=v[h[0]])
    p = tuple(
        _mat_from_json(payload["p"][i], rows=v[i], cols=d[i])
        for i in range(diagram.rank)
    )
    q = tuple(
        _mat_from_json(payload["q"][i], rows=d[i], cols=v[i])
        for i in range(diagram.rank)
    )
    datum = ADHMDatum(diagram, d, v, x, p, q)
    flag = None
    if "flag" in payload:
        steps = []
        for step in payload["flag"]:
            pieces = []
            for i in range(diagram.rank):
                vectors = [
                    [Fraction(int(num), int(den)) for num, den in vec]
                    for vec in step[i]
                ]
                pieces.append(
                    column_space(
                        mat(
                            [[vec[r] for vec in vectors] for r in range(d[i])],
                            rows=d[i],
                            cols=len(vectors),
                        )
                    )
                )
            steps.append(tuple(pieces))
        flag = GradedFlag(diagram, d, tuple(steps))
    return datum, flag


def datum_from_json_file(path: str) -> tuple[ADHMDatum, GradedFlag | None]:
    with open(path, encoding="utf-8") as fh:
        return datum_from_json(json.load(fh))

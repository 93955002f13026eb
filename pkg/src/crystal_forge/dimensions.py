"""Closed-form dimensions and emptiness tests for quiver strata.

Every function here is pure integer arithmetic in the pairing <.,.> and
the matrices A and X = 2*Id - A.  Halved quantities are computed on the
doubled integer with a parity assertion; no rational arithmetic occurs.
The formulas are evaluated wherever the input vectors make sense, whether
or not the stratum they describe is non-empty, so records carry the
relevant non-emptiness flags separately.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynkin import DynkinDiagram, Weight, pairing, vadd, vsub


def _half(n: int) -> int:
    if n % 2:
        raise AssertionError(f"expected an even integer, got {n}")
    return n // 2


def _xvv(diagram: DynkinDiagram, v: Weight) -> int:
    return pairing(diagram.apply_x(v), v)


def dominance_vector(diagram: DynkinDiagram, d, v) -> Weight:
    """d - 2v + Xv; coordinatewise non-negativity controls emptiness."""
    d = diagram.check_weight(d)
    v = diagram.check_weight(v)
    return vadd(vsub(d, (2 * c for c in v)), diagram.apply_x(v))


def basic_dims(diagram: DynkinDiagram, d, v, v0=None) -> dict:
    """Dimensions of the basic ADHM loci and quiver varieties.

    Keys:
      dim_preprojective    representations of the preprojective algebra in V
      dim_stable_locus     stable (= costable = bistable) ADHM locus
      dim_bistable_locus   same value, kept as its own field
      dim_quiver_variety       the stable locus modulo the gauge group
      dim_bistable_variety     ditto for the bistable locus (same value)
      dim_graded_variety   the v0-graded stable variety (needs v0)
      bistable_nonempty    whether d - 2v + Xv >= 0 coordinatewise
      dominance_vector     that vector itself
    """
    d = diagram.check_weight(d)
    v = diagram.check_weight(v)
    xvv = _xvv(diagram, v)
    dv = pairing(d, v)
    vv = pairing(v, v)
    delta = dominance_vector(diagram, d, v)
    out = {
        "dim_preprojective": _half(xvv),
        "dim_stable_locus": xvv + 2 * dv - vv,
        "dim_bistable_locus": xvv + 2 * dv - vv,
        "dim_quiver_variety": xvv + 2 * dv - 2 * vv,
        "dim_bistable_variety": xvv + 2 * dv - 2 * vv,
        "bistable_nonempty": all(c >= 0 for c in delta),
        "dominance_vector": delta,
    }
    if v0 is not None:
        v0 = diagram.check_weight(v0)
        ms = out["dim_quiver_variety"]
        mss0 = _xvv(diagram, v0) + 2 * pairing(d, v0) - 2 * pairing(v0, v0)
        out["dim_graded_variety"] = _half(ms) + _half(mss0)
    return out


@dataclass(frozen=True)
class StratumParams:
    """Data of a flag-compatible stratum: framing d, total v, and the
    per-step dimension tuples (with the optional complementary tuple)."""

    diagram: DynkinDiagram
    d: Weight
    v: Weight
    d_tuple: tuple[Weight, ...]
    v_tuple: tuple[Weight, ...]
    vt_tuple: tuple[Weight, ...] | None = None

    def __post_init__(self):
        diagram = self.diagram
        object.__setattr__(self, "d", diagram.check_weight(self.d))
        object.__setattr__(self, "v", diagram.check_weight(self.v))
        object.__setattr__(
            self, "d_tuple", tuple(diagram.check_weight(w) for w in self.d_tuple)
        )
        object.__setattr__(
            self, "v_tuple", tuple(diagram.check_weight(w) for w in self.v_tuple)
        )
        if self.vt_tuple is not None:
            object.__setattr__(
                self, "vt_tuple", tuple(diagram.check_weight(w) for w in self.vt_tuple)
            )
        n = len(self.d_tuple)
        if n < 1 or len(self.v_tuple) != n:
            raise ValueError("d_tuple and v_tuple must have the same length n >= 1")
        if tuple(map(sum, zip(*self.d_tuple, strict=True))) != tuple(self.d):
            raise ValueError("d_tuple entries must sum to d")
        if self.vt_tuple is not None:
            if len(self.vt_tuple) != n:
                raise ValueError("vt_tuple must have length n")
            total = [0] * diagram.rank
            for w in self.v_tuple + self.vt_tuple:
                for j, c in enumerate(w):
                    total[j] += c
            if tuple(total) != tuple(self.v):
                raise ValueError("v_tuple plus vt_tuple must sum to v")

    @property
    def n(self) -> int:
        return len(self.d_tuple)


def flag_variety_dim(diagram: DynkinDiagram, v, pieces) -> int:
    """Dimension of the graded partial flag variety with the given subfactors."""
    doubled = pairing(v, v) - sum(pairing(w, w) for w in pieces)
    return _half(doubled)


def graded_grassmannian_dim(w, v) -> int:
    """Dimension <w, v-w> of the graded Grassmannian of w-subspaces of V."""
    return pairing(w, vsub(tuple(v), tuple(w)))


def strat_dims(params: StratumParams) -> dict:
    """Dimensions of the flag-compatible strata and their quotients.

    Keys (fixed-flag entries are None without vt_tuple):
      dim_stratum_flag     stratum with the V-flag fixed
      dim_stratum_vvt      stratum with both subfactor tuples fixed,
                           computed as dim_stratum_flag + the flag variety
                           dimension; independent of vt_tuple
      dim_stratum          stratum with only the v-tuple fixed
      dim_stratum_bistable its bistable open part (same value)
      dim_tensor_variety   the stratum modulo the gauge group
      dim_mult_variety     ditto for the bistable part (same closed form)
      flag_variety_dim     dimension of the base flag variety
    """
    diagram = params.diagram
    d, v = params.d, params.v
    xvv = _xvv(diagram, v)
    dv = pairing(d, v)
    vv = pairing(v, v)
    per_step = sum(
        _xvv(diagram, vs) + 2 * pairing(ds, vs) - 2 * pairing(vs, vs)
        for ds, vs in zip(params.d_tuple, params.v_tuple)
    )
    dim_stratum = _half(xvv + 2 * dv + per_step)
    doubled_t = xvv + 2 * dv - 2 * vv + per_step
    out = {
        "dim_stratum": dim_stratum,
        "dim_stratum_bistable": dim_stratum,
        "dim_tensor_variety": _half(doubled_t),
        "dim_mult_variety": _half(doubled_t),
        "dim_stratum_flag": None,
        "dim_stratum_vvt": None,
        "flag_variety_dim": None,
    }
    if params.vt_tuple is not None:
        doubled_flag = xvv + 2 * dv - vv
        for ds, vs, vts in zip(params.d_tuple, params.v_tuple, params.vt_tuple):
            doubled_flag += (
                _xvv(diagram, vs)
                + 2 * pairing(ds, vs)
                - pairing(vs, vs)
                + pairing(vts, vts)
            )
        fl = flag_variety_dim(diagram, v, params.v_tuple + params.vt_tuple)
        out["dim_stratum_flag"] = _half(doubled_flag)
        out["dim_stratum_vvt"] = out["dim_stratum_flag"] + fl
        out["flag_variety_dim"] = fl
    return out


def core_split_fiber_dim(diagram: DynkinDiagram, d, u, t) -> int:
    """Fiber dimension of splitting off the largest submodule inside ker q.

    <d, u> + <Xt, u> - <t, u>, where u is the submodule dimension and
    t = v - u the complementary dimension.
    """
    d = diagram.check_weight(d)
    u = diagram.check_weight(u)
    t = diagram.check_weight(t)
    return pairing(d, u) + pairing(diagram.apply_x(t), u) - pairing(t, u)


def flag_split_fiber_dim(params: StratumParams, k: int) -> int:
    """Fiber dimension of cutting a fixed-flag stratum at step k.

    The top part collects the steps after k; with u and c its V- and
    D-dimensions, the fiber is <Xu, v-u> + <c, v-u> + <d-c, u> - <u, v-u>.
    """
    if params.vt_tuple is None:
        raise ValueError("cutting a stratum needs the complementary tuple")
    if not 0 < k < params.n:
        raise ValueError(f"cut position k must satisfy 0 < k < {params.n}")
    diagram = params.diagram
    rank = diagram.rank
    u = [0] * rank
    c = [0] * rank
    for s in range(k, params.n):
        for j in range(rank):
            u[j] += params.v_tuple[s][j] + params.vt_tuple[s][j]
            c[j] += params.d_tuple[s][j]
    u, c = tuple(u), tuple(c)
    vu = vsub(params.v, u)
    return (
        pairing(diagram.apply_x(u), vu)
        + pairing(c, vu)
        + pairing(vsub(params.d, c), u)
        - pairing(u, vu)
    )


def bistable_split_fiber_dim(diagram: DynkinDiagram, d1, v1, u, d2, v2) -> int:
    """Fiber dimension of splitting off the two bistable ends of a
    two-step bistable stratum around a middle module of dimension u.

    Derived from the two affine-fibration steps in the splitting: a
    vector-bundle count of the off-diagonal blocks minus the moment-map
    equations they satisfy.
    """
    for w in (d1, v1, u, d2, v2):
        diagram.check_weight(w)
    d1, v1, u, d2, v2 = (tuple(w) for w in (d1, v1, u, d2, v2))
    v = tuple(a + b + c for a, b, c in zip(v1, u, v2))
    d = vadd(d1, d2)
    doubled = (
        _xvv(diagram, v)
        - _xvv(diagram, v1)
        - _xvv(diagram, u)
        - _xvv(diagram, v2)
        + 2 * (pairing(d, v) - pairing(d1, v1) - pairing(d2, v2))
        - (pairing(v, v) - pairing(v1, v1) - pairing(u, u) - pairing(v2, v2))
    )
    return _half(doubled)


# -- weight dictionaries ----------------------------------------------------


def hw_weight(diagram: DynkinDiagram, d, v0) -> Weight:
    """Highest weight d - 2*v0 + X*v0 of the crystal labelled (d, v0)."""
    return dominance_vector(diagram, d, v0)


def v_from_weight(diagram: DynkinDiagram, d, mu) -> Weight | None:
    """Solve d - 2v + Xv = mu, i.e. Av = d - mu.

    Returns None when the solution is not a non-negative integer vector.
    """
    d = diagram.check_weight(d)
    mu = diagram.check_weight(mu)
    sol = diagram.solve_cartan(vsub(d, mu))
    if any(c.denominator != 1 or c < 0 for c in sol):
        return None
    return tuple(int(c) for c in sol)


def gprime_weight(diagram: DynkinDiagram, d, v) -> tuple[Weight, Weight]:
    """Weight (d - v + Xv, v) for the extended (reductive) weight lattice."""
    d = diagram.check_weight(d)
    v = diagram.check_weight(v)
    return (vadd(vsub(d, v), diagram.apply_x(v)), v)


def gprime_integrable(pair) -> bool:
    """Integrability of an extended weight (v, u): u >= 0 and v - u >= 0."""
    v, u = pair
    if len(v) != len(u):
        raise ValueError("extended weight components must have equal length")
    return all(c >= 0 for c in u) and all(a - b >= 0 for a, b in zip(v, u))

"""Normalized intertwiners T_{W,W'}(z) : W (x) W'(z) -> W'(z) (x) W.

W'(z) is W' with x_0^{+-} scaled by z^{+-1}.  T is the unique (up to scale)
solution of the intertwining equations, normalized on hw (x) hw'.  Its value
and Laurent data at z = 1 give the maps I_{W,W'} and the rank checks of the
worked examples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import ONE, ZERO, Frac, t_expansion, w as W_VAR, z as Z_VAR
from .linalg import SMat, inverse, nullspace_dense, rank
from .sl2 import Rep, tensor, verify_relations


class IntertwinerError(RuntimeError):
    pass


class PoleError(ArithmeticError):
    pass


@dataclass
class TMatrix:
    matrix: SMat
    n1: int
    n2: int
    source: str = ""
    target: str = ""
    normalized: bool = True

    @property
    def dim(self) -> int:
        return self.n1 * self.n2

    def substitute(self, name: str, value: Frac) -> "TMatrix":
        return TMatrix(self.matrix.map_entries(lambda x: x.substitute(name, value)), self.n1, self.n2, self.source, self.target)

    def inverse(self) -> SMat:
        return inverse(self.matrix)


def twist_rep(r: Rep, var: Frac = Z_VAR) -> Rep:
    """The module r(z): x_0^{+-} -> z^{+-1} x_0^{+-}."""
    return r.twist(var)


def _system(src: Rep, tgt: Rep):
    """Unknowns and equations of M src(g) = tgt(g) M, M weight preserving."""
    by_w_src: dict[int, list[int]] = {}
    by_w_tgt: dict[int, list[int]] = {}
    for i, x in enumerate(src.weights):
        by_w_src.setdefault(x, []).append(i)
    for i, x in enumerate(tgt.weights):
        by_w_tgt.setdefault(x, []).append(i)
    unknowns: dict[tuple[int, int], int] = {}
    for wt, srcs in by_w_src.items():
        for t in by_w_tgt.get(wt, []):
            for s in srcs:
                unknowns[(t, s)] = len(unknowns)
    rows = []
    for gs, gt in zip(src.gens(), tgt.gens()):
        # entry (t, s') of M gs - gt M
        eqs: dict[tuple[int, int], dict[int, Frac]] = {}
        for s2, col in enumerate(gs.cols):
            for s, val in col.items():
                for t in by_w_tgt.get(src.weights[s], []):
                    e = eqs.setdefault((t, s2), {})
                    u = unknowns[(t, s)]
                    e[u] = e.get(u, ZERO) + val
        gt_rows: dict[int, list[tuple[int, Frac]]] = {}
        for t2, col in enumerate(gt.cols):
            for t, val in col.items():
                gt_rows.setdefault(t, []).append((t2, val))
        for t, entries in gt_rows.items():
            for t2, val in entries:
                for s2 in by_w_src.get(tgt.weights[t2], []):
                    e = eqs.setdefault((t, s2), {})
                    u = unknowns[(t2, s2)]
                    e[u] = e.get(u, ZERO) - val
        for e in eqs.values():
            e = {u: v for u, v in e.items() if not v.is_zero()}
            if e:
                rows.append(e)
    return unknowns, rows


def solve_T(w: Rep, w2: Rep, var: Frac = Z_VAR) -> TMatrix:
    """T_{W,W'}(z) normalized so that hw (x) hw' maps to hw' (x) hw."""
    n1, n2 = w.dim, w2.dim
    w2z = twist_rep(w2, var)
    src = tensor(w, w2z)
    tgt = tensor(w2z, w)
    unknowns, rows = _system(src, tgt)
    nu = len(unknowns)
    dense = [[r.get(u, ZERO) for u in range(nu)] for r in rows]
    null = nullspace_dense(dense, nu)
    if len(null) != 1:
        raise IntertwinerError(f"intertwining space has dimension {len(null)}, expected 1")
    sol = null[0]
    a, b = w.hw_index(), w2.hw_index()
    s_idx, t_idx = a * n2 + b, b * n1 + a
    key = unknowns.get((t_idx, s_idx))
    if key is None or sol[key].is_zero():
        raise IntertwinerError("normalization entry vanishes")
    c = sol[key].inverse()
    mat = SMat(n1 * n2, n1 * n2)
    for (t, s), u in unknowns.items():
        x = sol[u]
        if not x.is_zero():
            mat.cols[s][t] = x * c
    return TMatrix(mat, n1, n2, source=f"{w.name}*{w2.name}(z)", target=f"{w2.name}(z)*{w.name}")


def intertwines(t: TMatrix, w: Rep, w2: Rep, var: Frac = Z_VAR) -> bool:
    w2z = twist_rep(w2, var)
    src, tgt = tensor(w, w2z), tensor(w2z, w)
    return all(t.matrix @ gs == gt @ t.matrix for gs, gt in zip(src.gens(), tgt.gens()))


def check_inverse_relation(w: Rep, w2: Rep) -> bool:
    """T_{W',W}(1/z) T_{W,W'}(z) = Id."""
    t = solve_T(w, w2)
    t2 = solve_T(w2, w).substitute("z", Z_VAR.inverse())
    return t2.matrix @ t.matrix == SMat.identity(t.dim)


def _eye(n: int) -> SMat:
    return SMat.identity(n)


def hexagon_paths(u: Rep, v: Rep, wr: Rep) -> tuple[SMat, SMat]:
    """Both composites U (x) V(z) (x) W(zw) -> W(zw) (x) V(z) (x) U."""
    du, dv, dw = u.dim, v.dim, wr.dim
    zw = Z_VAR * W_VAR
    t_uv = solve_T(u, v).matrix
    t_uw = solve_T(u, wr).substitute("z", zw).matrix
    t_vw = solve_T(v, wr).substitute("z", W_VAR).matrix
    path1 = t_vw.kron(_eye(du)) @ _eye(dv).kron(t_uw) @ t_uv.kron(_eye(dw))
    path2 = _eye(dw).kron(t_uv) @ t_uw.kron(_eye(dv)) @ _eye(du).kron(t_vw)
    return path1, path2


def check_hexagon(u: Rep, v: Rep, wr: Rep) -> bool:
    p1, p2 = hexagon_paths(u, v, wr)
    return p1 == p2


# -- expansions at z = 1 ----------------------------------------------------------


def laurent_at_1(mat: SMat | TMatrix, order: int) -> SMat:
    """Coefficient of (z-1)^order in the entrywise Laurent expansion at z = 1."""
    m = mat.matrix if isinstance(mat, TMatrix) else mat
    out = SMat(m.nrows, m.ncols)
    for j, col in enumerate(m.cols):
        for i, x in col.items():
            v, coeffs = t_expansion(x, "z", 1, order)
            if v < order:
                raise PoleError(f"entry ({i},{j}) has valuation {v} < {order} at z = 1")
            k = order - v
            if 0 <= k < len(coeffs) and not coeffs[k].is_zero():
                out.cols[j][i] = coeffs[k]
    return out


def valuation_at_1(mat: SMat | TMatrix) -> int:
    """Smallest valuation at z = 1 over all entries."""
    m = mat.matrix if isinstance(mat, TMatrix) else mat
    best = 10 ** 9
    for col in m.cols:
        for x in col.values():
            v, _ = t_expansion(x, "z", 1, -(10 ** 6))
            best = min(best, v)
    return best


def intertwiner_I(w: Rep, w2: Rep) -> SMat:
    """I_{W,W'} = T_{W,W'}(z) at z = 1; raises PoleError if T has a pole there."""
    return laurent_at_1(solve_T(w, w2), 0)


def naive_extension_rank(i_mat: SMat) -> int:
    """Rank of I viewed with scalars extended to Q(q)(z); equal to rank(I)."""
    return rank(i_mat.map_entries(lambda x: x * ONE))


def relations_hold_twisted(r: Rep) -> bool:
    return verify_relations(twist_rep(r))

"""Sparse exact linear algebra over the Frac field, plus a GF(p) shadow.

Matrices are stored column-wise: ``cols[j]`` is a dict ``{row: entry}``.
Vectors are plain dicts ``{index: entry}`` with zero entries never stored.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .fields import ONE, ZERO, Frac

PRIME = 2 ** 31 - 1
# evaluation point used by every modular computation
Q0, Z0, W0 = 48271, 69621, 16807


def vec_add(u: dict, v: dict, c=ONE) -> dict:
    """u + c*v as a new dict."""
    out = dict(u)
    for i, x in v.items():
        y = out.get(i)
        s = x * c if y is None else y + x * c
        if s.is_zero():
            out.pop(i, None)
        else:
            out[i] = s
    return out


def vec_scale(v: dict, c) -> dict:
    if c.is_zero():
        return {}
    return {i: x * c for i, x in v.items()}


class SMat:
    """Sparse matrix with exact entries, stored by columns."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: list[dict] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [dict() for _ in range(ncols)]

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "SMat":
        return cls(n, n if m is None else m)

    @classmethod
    def identity(cls, n: int) -> "SMat":
        return cls(n, n, [{j: ONE} for j in range(n)])

    @classmethod
    def diag(cls, entries: list) -> "SMat":
        return cls(len(entries), len(entries), [({j: e} if not e.is_zero() else {}) for j, e in enumerate(entries)])

    @classmethod
    def from_dense(cls, rows: list[list]) -> "SMat":
        n = len(rows)
        m = len(rows[0]) if n else 0
        out = cls(n, m)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                x = Frac(x) if not isinstance(x, Frac) else x
                if not x.is_zero():
                    out.cols[j][i] = x
        return out

    # -- access -------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.cols[j].get(i, ZERO)

    def __setitem__(self, ij, value):
        i, j = ij
        if value.is_zero():
            self.cols[j].pop(i, None)
        else:
            self.cols[j][i] = value

    def to_dense(self) -> list[list[Frac]]:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                out[i][j] = x
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def copy(self) -> "SMat":
        return SMat(self.nrows, self.ncols, [dict(c) for c in self.cols])

    # -- algebra ------------------------------------------------------
    def apply(self, v: dict) -> dict:
        out: dict = {}
        for j, x in v.items():
            for i, y in self.cols[j].items():
                t = y * x
                s = out.get(i)
                out[i] = t if s is None else s + t
        return {i: x for i, x in out.items() if not x.is_zero()}

    def __matmul__(self, other: "SMat") -> "SMat":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return SMat(self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def __add__(self, other: "SMat") -> "SMat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return SMat(self.nrows, self.ncols, [vec_add(a, b) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: "SMat") -> "SMat":
        return self + other.scale(-ONE)

    def scale(self, c) -> "SMat":
        return SMat(self.nrows, self.ncols, [vec_scale(col, c) for col in self.cols])

    def transpose(self) -> "SMat":
        out = SMat(self.ncols, self.nrows)
        for j, col in enumerate(self.cols):
            for i, x in col.items():
                out.cols[i][j] = x
        return out

    def kron(self, other: "SMat") -> "SMat":
        n2, m2 = other.nrows, other.ncols
        out = SMat(self.nrows * n2, self.ncols * m2)
        for j1, c1 in enumerate(self.cols):
            if not c1:
                continue
            for j2, c2 in enumerate(other.cols):
                col = out.cols[j1 * m2 + j2]
                for i1, x in c1.items():
                    for i2, y in c2.items():
                        col[i1 * n2 + i2] = x * y
        return out

    def map_entries(self, f: Callable[[Frac], Frac]) -> "SMat":
        cols = []
        for col in self.cols:
            new = {}
            for i, x in col.items():
                y = f(x)
                if not y.is_zero():
                    new[i] = y
            cols.append(new)
        return SMat(self.nrows, self.ncols, cols)

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def __eq__(self, other):
        if not isinstance(other, SMat):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and all(
            a == b for a, b in zip(self.cols, other.cols)
        )

    def submatrix(self, rows: list[int], cols: list[int]) -> "SMat":
        pos = {r: k for k, r in enumerate(rows)}
        out = SMat(len(rows), len(cols))
        for k, j in enumerate(cols):
            out.cols[k] = {pos[i]: x for i, x in self.cols[j].items() if i in pos}
        return out

    def mod_p(self, p: int = PRIME, q0: int = Q0, z0: int = Z0, w0: int = W0) -> list[dict]:
        return [{i: x.evaluate_mod(p, q0, z0, w0) for i, x in col.items()} for col in self.cols]

    def __repr__(self):
        return f"SMat({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def pretty(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.to_dense())


def block_diag_kron_identity(a: SMat, n: int) -> SMat:
    """a (x) Id_n."""
    return a.kron(SMat.identity(n))


# ---------------------------------------------------------------------------
# echelon forms


class ExactEchelon:
    """Incremental row-echelon basis of a subspace, exact over Frac.

    Each stored vector has a pivot (its smallest index) with entry 1.
    """

    def __init__(self):
        self.basis: dict[int, dict] = {}

    def __len__(self):
        return len(self.basis)

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        done = -1
        while True:
            cand = [k for k in v if k > done and k in self.basis]
            if not cand:
                return v
            i = min(cand)
            v = vec_add(v, self.basis[i], -v[i])
            done = i

    def add(self, v: dict) -> dict | None:
        """Insert v; return the normalized new basis vector or None if dependent."""
        r = self.reduce(v)
        if not r:
            return None
        piv = min(r)
        inv = r[piv].inverse()
        r = {i: x * inv for i, x in r.items()}
        self.basis[piv] = r
        return r

    def rref(self) -> tuple[list[int], list[dict]]:
        """Pivots (ascending) and fully reduced basis vectors."""
        pivots = sorted(self.basis)
        red = {p: dict(self.basis[p]) for p in pivots}
        for p in reversed(pivots):
            for p2 in pivots:
                if p2 < p and p in red[p2]:
                    red[p2] = vec_add(red[p2], red[p], -red[p2][p])
        return pivots, [red[p] for p in pivots]


class ModEchelon:
    """Same as ExactEchelon but over GF(p) with int entries."""

    def __init__(self, p: int = PRIME):
        self.p = p
        self.basis: dict[int, dict] = {}

    def __len__(self):
        return len(self.basis)

    def add(self, v: dict) -> dict | None:
        p = self.p
        v = {i: x % p for i, x in v.items() if x % p}
        done = -1
        while True:
            cand = [k for k in v if k > done and k in self.basis]
            if not cand:
                break
            i = min(cand)
            c = v[i]
            for j, y in self.basis[i].items():
                s = (v.get(j, 0) - c * y) % p
                if s:
                    v[j] = s
                else:
                    v.pop(j, None)
            done = i
        if not v:
            return None
        piv = min(v)
        inv = pow(v[piv], -1, p)
        v = {i: x * inv % p for i, x in v.items()}
        self.basis[piv] = v
        return v


def mod_apply(cols: list[dict], v: dict, p: int = PRIME) -> dict:
    out: dict = {}
    for j, x in v.items():
        for i, y in cols[j].items():
            out[i] = (out.get(i, 0) + x * y) % p
    return {i: x for i, x in out.items() if x}


def closure_span(gens: list, v_list: Iterable[dict], echelon, apply: Callable, limit: int | None = None):
    """Breadth-first closure of span(v_list) under the operators ``gens``.

    Stops early once the span reaches ``limit`` dimensions.
    """
    queue = []
    for v in v_list:
        b = echelon.add(v)
        if b is not None:
            queue.append(b)
    head = 0
    while head < len(queue):
        if limit is not None and len(echelon) >= limit:
            break
        b = queue[head]
        head += 1
        for g in gens:
            nb = echelon.add(apply(g, b))
            if nb is not None:
                queue.append(nb)
    return echelon


# ---------------------------------------------------------------------------
# dense exact routines


def rref_dense(rows: list[list[Frac]]) -> tuple[list[list[Frac]], list[int]]:
    """Reduced row echelon form of a dense matrix (list of rows)."""
    a = [list(r) for r in rows]
    if not a:
        return a, []
    n, m = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if not a[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv if not x.is_zero() else x for x in a[r]]
        for i in range(n):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y if not y.is_zero() else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return a, pivots


def rank(mat: SMat) -> int:
    """Exact rank, computed column by column with an incremental echelon."""
    ech = ExactEchelon()
    for col in mat.cols:
        if col:
            ech.add(col)
    return len(ech)


def rank_mod(mat: SMat, p: int = PRIME) -> int:
    ech = ModEchelon(p)
    for col in mat.mod_p(p):
        if col:
            ech.add(col)
    return len(ech)


def nullspace_dense(rows: list[list[Frac]], ncols: int) -> list[list[Frac]]:
    """Basis of {x : rows * x = 0}."""
    if not rows:
        return [[ONE if k == j else ZERO for k in range(ncols)] for j in range(ncols)]
    red, pivots = rref_dense(rows)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for r, pc in enumerate(pivots):
            if not red[r][f].is_zero():
                x[pc] = -red[r][f]
        basis.append(x)
    return basis


def kernel_dim(mat: SMat) -> int:
    return mat.ncols - rank(mat)


def inverse(mat: SMat) -> SMat:
    """Exact inverse via Gauss-Jordan on [A | I]."""
    n = mat.nrows
    if n != mat.ncols:
        raise ValueError("not square")
    dense = mat.to_dense()
    aug = [row + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(dense)]
    red, pivots = rref_dense(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return SMat.from_dense([row[n:] for row in red])

"""Explicit finite-dimensional U_q(sl2-hat) modules.

A module is given by the four matrices of x_0^+, x_0^-, x_1^+, x_1^- and an
integer weight for each basis vector: k_1 acts by q^wt and k_0 by q^-wt (level
zero).  Evaluation modules put the spectral parameter a = q^l on x_0^+:

    x_1^+ = [[0,1],[0,0]],  x_1^- = [[0,0],[1,0]],
    x_0^+ = a * x_1^-,      x_0^- = a^-1 * x_1^+.

With this choice V(q^2) (x) V(1) is cyclic and V(1) (x) V(q^2) is not, which is
checked by ``calibration_table``.

Cyclicity is decided by a breadth-first span closure.  A modular shadow of the
module (q, z, w evaluated at fixed residues mod a large prime) runs first: its
span can only be smaller than the generic one, so a full modular span is an
exact certificate.  Anything short of full is recomputed exactly.
"""

from __future__ import annotations

import threading
from functools import reduce

from .fields import ONE, Frac, qfactorial
from .linalg import (
    PRIME,
    Q0,
    W0,
    Z0,
    ExactEchelon,
    ModEchelon,
    SMat,
    closure_span,
    mod_apply,
)
from .monomial import Monomial, sp
from .notation import format_monomial

GEN_NAMES = ("x0p", "x0m", "x1p", "x1m")

# orientation and shift of the evaluation map, see calibration_table
ORIENTATION = 1
C0 = 0


def _qpow(n: int) -> Frac:
    return Frac.q_pow(n)


class Rep:
    """Finite-dimensional module with exact generator matrices."""

    def __init__(self, weights, x0p: SMat, x0m: SMat, x1p: SMat, x1m: SMat, hw: dict, name: str = "", monomial=None):
        self.weights = list(weights)
        self.x0p, self.x0m, self.x1p, self.x1m = x0p, x0m, x1p, x1m
        self.hw = hw
        self.name = name
        self.monomial = monomial
        self._mod = None
        for g in (x0p, x0m, x1p, x1m):
            if g.nrows != self.dim or g.ncols != self.dim:
                raise ValueError("generator shape does not match the weights")

    @property
    def dim(self) -> int:
        return len(self.weights)

    def gens(self) -> list[SMat]:
        return [self.x0p, self.x0m, self.x1p, self.x1m]

    def k(self, i: int, power: int = 1) -> SMat:
        sign = 1 if i == 1 else -1
        return SMat.diag([_qpow(sign * power * w) for w in self.weights])

    def k_diag(self, i: int, power: int = 1) -> list[Frac]:
        sign = 1 if i == 1 else -1
        return [_qpow(sign * power * w) for w in self.weights]

    def matrix(self, name: str) -> SMat:
        if name in ("k0", "k1"):
            return self.k(int(name[1]))
        return getattr(self, name)

    def mod(self) -> "ModRep":
        if self._mod is None:
            self._mod = ModRep(
                self.weights,
                [g.mod_p() for g in self.gens()],
                {i: x.evaluate_mod(PRIME, Q0, Z0, W0) for i, x in self.hw.items()},
            )
        return self._mod

    def twist(self, factor: Frac) -> "Rep":
        """Spectral shift: x_0^+ -> factor * x_0^+, x_0^- -> factor^-1 * x_0^-."""
        inv = factor.inverse()
        return Rep(
            self.weights,
            self.x0p.scale(factor),
            self.x0m.scale(inv),
            self.x1p,
            self.x1m,
            self.hw,
            name=f"{self.name}({factor})",
            monomial=self.monomial,
        )

    def map_entries(self, f) -> "Rep":
        return Rep(
            self.weights,
            *(g.map_entries(f) for g in self.gens()),
            {i: f(x) for i, x in self.hw.items() if not f(x).is_zero()},
            name=self.name,
            monomial=self.monomial,
        )

    def weight_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.weights:
            out[w] = out.get(w, 0) + 1
        return out

    def hw_index(self) -> int:
        if len(self.hw) != 1:
            raise ValueError("highest weight vector is not a basis vector")
        return next(iter(self.hw))

    def __repr__(self):
        return f"Rep({self.name or '?'}, dim={self.dim})"


class ModRep:
    """Generator matrices reduced mod PRIME at the fixed evaluation point."""

    def __init__(self, weights, gens: list[list[dict]], hw: dict):
        self.weights = list(weights)
        self.gens = gens
        self.hw = {i: x for i, x in hw.items() if x % PRIME}

    @property
    def dim(self) -> int:
        return len(self.weights)


# -- constructors ----------------------------------------------------------------------


def trivial_module() -> Rep:
    z = SMat.zeros(1)
    return Rep([0], z, z, z, z, {0: ONE}, name="1", monomial=Monomial())


def eval_module(l: int, orientation: int | None = None, c0: int | None = None) -> Rep:
    """The fundamental module V(q^l), basis (v+, v-)."""
    s = ORIENTATION if orientation is None else orientation
    c = C0 if c0 is None else c0
    a = _qpow(s * (l + c))
    x1p = SMat(2, 2, [{}, {0: ONE}])
    x1m = SMat(2, 2, [{1: ONE}, {}])
    x0p = x1m.scale(a)
    x0m = x1p.scale(a.inverse())
    return Rep([1, -1], x0p, x0m, x1p, x1m, {0: ONE}, name=f"V(q^{l})", monomial=Monomial.Y(1, sp(l)))


def _kron_vec(u: dict, v: dict, n2: int) -> dict:
    out = {}
    for i, x in u.items():
        for j, y in v.items():
            out[i * n2 + j] = x * y
    return out


def tensor(w: Rep, w2: Rep) -> Rep:
    """w (x) w2 through the coproduct
    D(x+) = x+ (x) 1 + k (x) x+,  D(x-) = x- (x) k^-1 + 1 (x) x-.
    """
    n1, n2 = w.dim, w2.dim
    i1, i2 = SMat.identity(n1), SMat.identity(n2)
    k0a, k1a = w.k(0), w.k(1)
    k0b_inv, k1b_inv = w2.k(0, -1), w2.k(1, -1)
    x0p = w.x0p.kron(i2) + k0a.kron(w2.x0p)
    x1p = w.x1p.kron(i2) + k1a.kron(w2.x1p)
    x0m = w.x0m.kron(k0b_inv) + i1.kron(w2.x0m)
    x1m = w.x1m.kron(k1b_inv) + i1.kron(w2.x1m)
    weights = [a + b for a in w.weights for b in w2.weights]
    mono = None
    if w.monomial is not None and w2.monomial is not None:
        mono = w.monomial * w2.monomial
    return Rep(weights, x0p, x0m, x1p, x1m, _kron_vec(w.hw, w2.hw, n2), name=f"{w.name}*{w2.name}", monomial=mono)


def tensor_all(reps: list[Rep]) -> Rep:
    if not reps:
        return trivial_module()
    return reduce(tensor, reps)


def _mod_kron(a: list[dict], b: list[dict], n2: int) -> list[dict]:
    out = []
    for ca in a:
        for cb in b:
            col = {}
            for i, x in ca.items():
                for j, y in cb.items():
                    col[i * n2 + j] = x * y % PRIME
            out.append(col)
    return out


def _mod_diag(vals: list[int]) -> list[dict]:
    return [{i: v} for i, v in enumerate(vals)]


def _mod_add(a: list[dict], b: list[dict]) -> list[dict]:
    out = []
    for ca, cb in zip(a, b):
        col = dict(ca)
        for i, y in cb.items():
            s = (col.get(i, 0) + y) % PRIME
            if s:
                col[i] = s
            else:
                col.pop(i, None)
        out.append(col)
    return out


def tensor_mod(w: ModRep, w2: ModRep) -> ModRep:
    n1, n2 = w.dim, w2.dim
    i1, i2 = _mod_diag([1] * n1), _mod_diag([1] * n2)
    q0inv = pow(Q0, -1, PRIME)

    def kd(weights, sign):
        return _mod_diag([pow(Q0 if sign * x >= 0 else q0inv, abs(x), PRIME) for x in weights])

    k0a, k1a = kd(w.weights, -1), kd(w.weights, 1)
    k0b_inv, k1b_inv = kd(w2.weights, 1), kd(w2.weights, -1)
    x0p = _mod_add(_mod_kron(w.gens[0], i2, n2), _mod_kron(k0a, w2.gens[0], n2))
    x0m = _mod_add(_mod_kron(w.gens[1], k0b_inv, n2), _mod_kron(i1, w2.gens[1], n2))
    x1p = _mod_add(_mod_kron(w.gens[2], i2, n2), _mod_kron(k1a, w2.gens[2], n2))
    x1m = _mod_add(_mod_kron(w.gens[3], k1b_inv, n2), _mod_kron(i1, w2.gens[3], n2))
    hw = {}
    for i, x in w.hw.items():
        for j, y in w2.hw.items():
            hw[i * n2 + j] = x * y % PRIME
    return ModRep([a + b for a in w.weights for b in w2.weights], [x0p, x0m, x1p, x1m], hw)


# -- relations ---------------------------------------------------------------------------

_CARTAN = ((2, -2), (-2, 2))


def relation_failures(r: Rep, first_only: bool = False) -> list[str]:
    """Names of the defining relations that fail on r (exact check)."""
    bad: list[str] = []
    n = r.dim
    xp = {0: r.x0p, 1: r.x1p}
    xm = {0: r.x0m, 1: r.x1m}
    k = {i: r.k(i) for i in (0, 1)}
    kinv = {i: r.k(i, -1) for i in (0, 1)}

    def fail(name):
        bad.append(name)
        return first_only

    if not (k[0] @ k[1] == k[1] @ k[0]):
        if fail("k0k1=k1k0"):
            return bad
    for i in (0, 1):
        for j in (0, 1):
            c = _CARTAN[i][j]
            if not (k[i] @ xp[j] @ kinv[i] == xp[j].scale(_qpow(c))):
                if fail(f"k{i}x{j}+"):
                    return bad
            if not (k[i] @ xm[j] @ kinv[i] == xm[j].scale(_qpow(-c))):
                if fail(f"k{i}x{j}-"):
                    return bad
    denom = (_qpow(1) - _qpow(-1)).inverse()
    for i in (0, 1):
        for j in (0, 1):
            lhs = xp[i] @ xm[j] - xm[j] @ xp[i]
            rhs = (k[i] - kinv[i]).scale(denom) if i == j else SMat.zeros(n)
            if not (lhs == rhs):
                if fail(f"[x{i}+,x{j}-]"):
                    return bad
    facts = [qfactorial(m).inverse() for m in range(4)]
    for sign, x in (("+", xp), ("-", xm)):
        for i, j in ((0, 1), (1, 0)):
            deg = 1 - _CARTAN[i][j]
            powers = [SMat.identity(n)]
            for _ in range(deg):
                powers.append(powers[-1] @ x[i])
            total = SMat.zeros(n)
            for s in range(deg + 1):
                term = powers[deg - s].scale(facts[deg - s]) @ x[j] @ powers[s].scale(facts[s])
                total = total + (term if s % 2 == 0 else term.scale(-ONE))
            if not total.is_zero():
                if fail(f"serre{sign}({i},{j})"):
                    return bad
    return bad


def verify_relations(r: Rep) -> bool:
    return not relation_failures(r, first_only=True)


# -- spans ------------------------------------------------------------------------------


def _weight_split(weights: list[int], v: dict) -> list[dict]:
    parts: dict[int, dict] = {}
    for i, x in v.items():
        parts.setdefault(weights[i], {})[i] = x
    return [parts[w] for w in sorted(parts, reverse=True)]


def mod_span_dim(m: ModRep, v: dict | None = None) -> int:
    v = m.hw if v is None else {i: x % PRIME for i, x in v.items() if x % PRIME}
    if not v:
        return 0
    ech = ModEchelon(PRIME)
    closure_span(m.gens, _weight_split(m.weights, v), ech, lambda g, b: mod_apply(g, b), limit=m.dim)
    return len(ech)


def exact_span(r: Rep, v: dict) -> ExactEchelon:
    ech = ExactEchelon()
    v = {i: x for i, x in v.items() if not x.is_zero()}
    if v:
        closure_span(r.gens(), _weight_split(r.weights, v), ech, lambda g, b: g.apply(b), limit=r.dim)
    return ech


def cyclic_span(r: Rep, v: dict | None = None) -> int:
    """dim U_q . v (v defaults to the highest weight vector)."""
    v = r.hw if v is None else v
    v = {i: x for i, x in v.items() if not x.is_zero()}
    if not v:
        return 0
    try:
        modv = {i: x.evaluate_mod(PRIME, Q0, Z0, W0) for i, x in v.items()}
        if mod_span_dim(r.mod(), modv) == r.dim:
            return r.dim
    except ZeroDivisionError:
        pass
    return len(exact_span(r, v))


def is_cyclic(r: Rep) -> bool:
    return cyclic_span(r) == r.dim


def is_cyclic_product(reps: list[Rep]) -> bool:
    """Cyclicity of reps[0] (x) ... (x) reps[-1], building the exact tensor only if needed."""
    if not reps:
        return True
    m = reduce(tensor_mod, [x.mod() for x in reps])
    if mod_span_dim(m) == m.dim:
        return True
    return is_cyclic(tensor_all(reps))


def restrict(r: Rep, ech: ExactEchelon, name: str = "", monomial=None) -> Rep:
    """The action of r on the subspace spanned by ``ech`` (closed under the generators)."""
    pivots, basis = ech.rref()
    d = len(pivots)

    def restricted(g: SMat) -> SMat:
        cols = []
        for b in basis:
            img = g.apply(b)
            col = {}
            for k, p in enumerate(pivots):
                x = img.get(p)
                if x is not None:
                    col[k] = x
            # the image must lie in the span
            check = {}
            for k, x in col.items():
                for i, y in basis[k].items():
                    t = x * y
                    s = check.get(i)
                    check[i] = t if s is None else s + t
            check = {i: x for i, x in check.items() if not x.is_zero()}
            if check != img:
                raise ArithmeticError("subspace is not stable under the action")
            cols.append(col)
        return SMat(d, d, cols)

    weights = [r.weights[p] for p in pivots]
    hw = {}
    for k, p in enumerate(pivots):
        x = r.hw.get(p)
        if x is not None:
            hw[k] = x
    return Rep(weights, *(restricted(g) for g in r.gens()), hw, name=name, monomial=monomial)


# -- simple modules ------------------------------------------------------------------------

_SIMPLE_CACHE: dict = {}
_SIMPLE_LOCK = threading.Lock()


class ConventionError(RuntimeError):
    """Raised when an explicit module disagrees with its q-character."""


def simple_module(M: Monomial) -> Rep:
    """L(M) as the cyclic span of the highest weight vector in
    V(q^{l_1}) (x) ... (x) V(q^{l_R}) with l_1 <= ... <= l_R."""
    from .criteria import admissible_factorization
    from .qchar import SL2, sl2_simple_qchar

    with _SIMPLE_LOCK:
        hit = _SIMPLE_CACHE.get(M)
    if hit is not None:
        return hit
    if len(M.orbits()) > 1:
        raise ValueError("simple_module expects a single-orbit monomial")
    fl = admissible_factorization(M, SL2)
    if not fl:
        rep = trivial_module()
    else:
        amb = tensor_all([eval_module(a.l) for _, a in fl])
        ech = exact_span(amb, amb.hw)
        rep = restrict(amb, ech, name=f"L({format_monomial(M)})", monomial=M)
    chi = sl2_simple_qchar(M)
    if rep.dim != chi.dimension():
        raise ConventionError(f"dim L({M}) = {rep.dim} but its q-character has dimension {chi.dimension()}")
    with _SIMPLE_LOCK:
        _SIMPLE_CACHE[M] = rep
    return rep


def is_simple_tensor(w: Rep, w2: Rep) -> bool:
    return is_cyclic_product([w, w2]) and is_cyclic_product([w2, w])


def weight_character(chi) -> dict[int, int]:
    """sl2 weight multiset of a q-character."""
    out: dict[int, int] = {}
    for m, c in chi.terms.items():
        w = m.degree()
        out[w] = out.get(w, 0) + c
    return out


def calibration_table(ls: tuple[int, int] = (2, 0)) -> dict[tuple[int, int], tuple[bool, bool]]:
    """For each (orientation, c0): (V(q^a) (x) V(q^b) cyclic, V(q^b) (x) V(q^a) cyclic)."""
    a, b = ls
    out = {}
    for s in (1, -1):
        for c in (-2, -1, 0, 1, 2):
            va, vb = eval_module(a, s, c), eval_module(b, s, c)
            out[(s, c)] = (is_cyclic(tensor(va, vb)), is_cyclic(tensor(vb, va)))
    return out


"""Laurent monomials in the variables Y_{i,a}.

A spectral parameter is stored as ``(orbit, l, k)`` meaning orbit * q^l * eps^k.
A monomial key ``(i, a)`` stands for the variable Y_{i, a^{d_i}}: keys always
hold the base parameter, so every shift below is integer arithmetic on (l, k).
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .cartan import CartanData

DEFAULT_ORBIT = "c"


class SpectralParam(NamedTuple):
    orbit: str
    l: int
    k: int = 0

    def shift(self, dl: int = 0, dk: int = 0, twist: int | None = None) -> "SpectralParam":
        k = self.k + dk
        if twist is not None:
            k %= twist
        return SpectralParam(self.orbit, self.l + dl, k)

    def sort_key(self):
        return (self.orbit, self.l, self.k)


def sp(l: int, k: int = 0, orbit: str = DEFAULT_ORBIT) -> SpectralParam:
    return SpectralParam(orbit, l, k)


class Monomial:
    """Immutable element of the free abelian group on the keys (i, a)."""

    __slots__ = ("_exps", "_hash")

    def __init__(self, exps: dict | Iterable | None = None):
        items = exps.items() if isinstance(exps, dict) else (exps or ())
        out: dict = {}
        for key, e in items:
            i, a = key
            if not isinstance(a, SpectralParam):
                a = SpectralParam(*a)
            key = (int(i), a)
            out[key] = out.get(key, 0) + int(e)
        self._exps = {k: v for k, v in out.items() if v != 0}
        self._hash = None

    # -- construction helpers ------------------------------------------------
    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    @classmethod
    def Y(cls, i: int, a: SpectralParam | int, e: int = 1) -> "Monomial":
        if isinstance(a, int):
            a = sp(a)
        return cls({(i, a): e})

    # -- accessors -------------------------------------------------------------
    @property
    def exps(self) -> dict:
        return dict(self._exps)

    def items(self):
        return self._exps.items()

    def exponent(self, i: int, a: SpectralParam) -> int:
        """u_{i,a}(m) for the key (i, a)."""
        return self._exps.get((i, a), 0)

    def keys(self):
        return self._exps.keys()

    def __len__(self):
        return len(self._exps)

    def is_one(self) -> bool:
        return not self._exps

    def is_dominant(self) -> bool:
        return all(e > 0 for e in self._exps.values())

    def is_j_dominant(self, j: int) -> bool:
        return all(e > 0 for (i, _), e in self._exps.items() if i == j)

    def part(self, j: int) -> "Monomial":
        """Factors carrying node index j."""
        return Monomial({key: e for key, e in self._exps.items() if key[0] == j})

    def orbits(self) -> set[str]:
        return {a.orbit for (_, a) in self._exps}

    def degree(self) -> int:
        return sum(self._exps.values())

    def sort_key(self) -> tuple:
        return tuple(
            ((a.orbit, i, a.l, a.k), e)
            for (i, a), e in sorted(self._exps.items(), key=lambda kv: (kv[0][1].orbit, kv[0][0], kv[0][1].l, kv[0][1].k))
        )

    # -- group structure ---------------------------------------------------------
    def __mul__(self, other: "Monomial") -> "Monomial":
        out = dict(self._exps)
        for key, e in other._exps.items():
            s = out.get(key, 0) + e
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        m = Monomial.__new__(Monomial)
        m._exps = out
        m._hash = None
        return m

    def inv(self) -> "Monomial":
        m = Monomial.__new__(Monomial)
        m._exps = {k: -e for k, e in self._exps.items()}
        m._hash = None
        return m

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inv()

    def __pow__(self, n: int) -> "Monomial":
        if n == 0:
            return Monomial()
        m = Monomial.__new__(Monomial)
        m._exps = {k: e * n for k, e in self._exps.items()}
        m._hash = None
        return m

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exps == other._exps

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._exps.items()))
        return self._hash

    def __lt__(self, other: "Monomial"):
        return self.sort_key() < other.sort_key()

    def shift(self, dl: int) -> "Monomial":
        """Multiply every spectral parameter by q^dl."""
        return Monomial({(i, a.shift(dl)): e for (i, a), e in self._exps.items()})

    def __repr__(self):
        from .notation import format_monomial

        return f"Monomial({format_monomial(self)!r})"

    def __str__(self):
        from .notation import format_monomial

        return format_monomial(self)


def mul(m: Monomial, m2: Monomial) -> Monomial:
    return m * m2


def inv(m: Monomial) -> Monomial:
    return m.inv()


def prod(ms: Iterable[Monomial]) -> Monomial:
    out = Monomial()
    for m in ms:
        out = out * m
    return out


# -- normalization -------------------------------------------------------------


def canonical_param(cd: CartanData, i: int, a: SpectralParam) -> SpectralParam:
    """Reduce k mod the twist order; nodes with d_i > 1 forget k entirely.

    For d_i = r the variable Y_{i, a^{d_i}} does not see eps^k.
    """
    r = cd.twist_order
    if cd.d_of(i) > 1:
        return SpectralParam(a.orbit, a.l, 0)
    return SpectralParam(a.orbit, a.l, a.k % r)


def normalize(m: Monomial, cd: CartanData) -> Monomial:
    for i, _ in m.keys():
        if i not in cd.nodes:
            raise ValueError(f"node {i} is not in I = 1..{cd.n}")
    return Monomial([((i, canonical_param(cd, i, a)), e) for (i, a), e in m.items()])


# -- A monomials --------------------------------------------------------------------


def a_monomial(cd: CartanData, i: int, a: SpectralParam) -> Monomial:
    """The monomial A_{i,a}, with ``a`` the actual parameter of the A variable."""
    if i not in cd.nodes:
        raise ValueError(f"node {i} is not in I = 1..{cd.n}")
    tw = cd.twist_order
    f: dict = {}

    def put(j, p, e):
        key = (j, canonical_param(cd, j, p))
        f[key] = f.get(key, 0) + e

    if tw == 1:
        ri = int(cd.r[i])
        put(i, a.shift(-ri), 1)
        put(i, a.shift(ri), 1)
        for j in cd.nodes:
            if j == i:
                continue
            c = cd.C[j][i]
            if c == -1:
                put(j, a, -1)
            elif c == -2:
                put(j, a.shift(-1), -1)
                put(j, a.shift(1), -1)
            elif c == -3:
                put(j, a.shift(-2), -1)
                put(j, a, -1)
                put(j, a.shift(2), -1)
        return Monomial(f)

    n = cd.n
    if cd.type.family == "A_even" and i == n:
        put(n, a.shift(-1), 1)
        put(n, a.shift(1), 1)
        put(n, a.shift(0, 1, tw), -1)
        if n > 1:
            put(n - 1, a, -1)
        return Monomial(f)

    ri = cd.r[i]
    if ri <= 1:
        put(i, a.shift(-1), 1)
        put(i, a.shift(1), 1)
        for j in cd.nodes:
            if j != i and cd.C[i][j] < 0:
                put(j, a, -1)
        return Monomial(f)

    # r_i = r > 1: pass to the base parameter c with c^r = a
    if a.l % tw != 0 or a.k % tw != 0:
        raise ValueError(f"parameter {a} has no r-th root on the (l, k) lattice")
    c = SpectralParam(a.orbit, a.l // tw, 0)
    put(i, c.shift(-1), 1)
    put(i, c.shift(1), 1)
    for j in cd.nodes:
        if j == i or cd.C[i][j] >= 0:
            continue
        if cd.r[j] == tw:
            put(j, c, -1)
        else:
            for s in range(tw):
                put(j, c.shift(0, s, tw), -1)
    return Monomial(f)


def a_monomial_base(cd: CartanData, i: int, c: SpectralParam) -> Monomial:
    """A_{i, c^{d_i}}: the A variable attached to the base parameter c."""
    d = cd.d_of(i)
    if d == 1:
        return a_monomial(cd, i, c)
    return a_monomial(cd, i, SpectralParam(c.orbit, c.l * d, 0))


# -- truncations and splits ----------------------------------------------------------


def _single_orbit(m: Monomial) -> None:
    if len(m.orbits()) > 1:
        raise ValueError(f"monomial {m} spans several orbits {sorted(m.orbits())}")


def truncate(m: Monomial, L: int) -> tuple[Monomial, Monomial]:
    """(m^{>=L}, m^{<=L-1}); single-orbit input only."""
    _single_orbit(m)
    hi = {key: e for key, e in m.items() if key[1].l >= L}
    lo = {key: e for key, e in m.items() if key[1].l < L}
    return Monomial(hi), Monomial(lo)


def plus_minus_split(M: Monomial) -> tuple[Monomial, Monomial]:
    """(M_+, M_-) = (M^{>=1}, M^{<=0})."""
    if not M.is_dominant():
        raise ValueError(f"{M} is not dominant")
    return truncate(M, 1)


def orbit_factorize(M: Monomial) -> dict[str, Monomial]:
    if not M.is_dominant():
        raise ValueError(f"{M} is not dominant")
    out: dict[str, dict] = {}
    for (i, a), e in M.items():
        out.setdefault(a.orbit, {})[(i, a)] = e
    return {o: Monomial(v) for o, v in sorted(out.items())}


def in_C_ell(M: Monomial, ell: int) -> bool:
    if not M.is_dominant():
        raise ValueError(f"{M} is not dominant")
    _single_orbit(M)
    return all(0 <= a.l <= ell for (_, a) in M.keys())


def weight_of(m: Monomial, cd: CartanData) -> tuple:
    """omega(m) in the fundamental weight basis."""
    w = [0] * cd.n
    for (i, _), e in m.items():
        w[i - 1] += e * cd.mu[i]
    return tuple(w)


def l_support(m: Monomial) -> list[int]:
    return sorted({a.l for (_, a) in m.keys()})

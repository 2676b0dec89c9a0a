"""Exact rational functions in q, z and w.

A single reduced-fraction type covers the three scalar fields used in the
package: Q(q) for explicit U_q(sl2^) modules, Q(q)(z) for z-twisted modules and
intertwiners, and Q(q)(z, w) for the two-parameter hexagon check.  Numerators
and denominators are integer polynomials (FLINT ``fmpz_mpoly``) kept coprime,
with the denominator's leading coefficient positive, so equal values have equal
representations.
"""

from __future__ import annotations

import flint

CTX = flint.fmpz_mpoly_ctx.get(("q", "z", "w"), "lex")
Q, Z, W = CTX.gens()
ONE_POLY = CTX.constant(1)
ZERO_POLY = CTX.constant(0)

_VARS = {"q": 0, "z": 1, "w": 2}


def poly(value) -> flint.fmpz_mpoly:
    if isinstance(value, flint.fmpz_mpoly):
        return value
    return CTX.constant(int(value))


def poly_key(p: flint.fmpz_mpoly) -> tuple:
    return tuple(sorted((tuple(m), int(c)) for m, c in p.to_dict().items()))


class Frac:
    """Reduced fraction ``num / den`` of integer polynomials in q, z, w."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None, _reduced: bool = False):
        if isinstance(num, Frac):
            if den is not None:
                raise TypeError("Frac(Frac, den) is not supported")
            self.num, self.den = num.num, num.den
            return
        num = poly(num)
        den = ONE_POLY if den is None else poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = ONE_POLY
            elif not den.is_one():
                g = num.gcd(den)
                if not g.is_one():
                    num = num // g
                    den = den // g
                if den.leading_coefficient() < 0:
                    num, den = -num, -den
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------
    @staticmethod
    def q_pow(n: int) -> "Frac":
        if n >= 0:
            return Frac(Q ** n, _reduced=True)
        return Frac(ONE_POLY, Q ** (-n), _reduced=True)

    @staticmethod
    def var(name: str) -> "Frac":
        return Frac(CTX.gens()[_VARS[name]], _reduced=True)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic ---------------------------------------------------
    def __neg__(self):
        return Frac(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return Frac(self.num + other.num, _reduced=True)
        if self.den == other.den:
            return Frac(self.num + other.num, self.den)
        return Frac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return Frac(_reduced=True)
        if b.is_one() and d.is_one():
            return Frac(a * c, _reduced=True)
        # cross-cancel; both inputs are already reduced
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a // g1, d // g1
        if not g2.is_one():
            c, b = c // g2, b // g2
        num, den = a * c, b * d
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Frac(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "Frac":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Frac(num, den, _reduced=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Frac(self.num ** n, self.den ** n, _reduced=True)

    # -- comparison / hashing ------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((poly_key(self.num), poly_key(self.den)))

    def __repr__(self):
        if self.den.is_one():
            return f"Frac({self.num})"
        return f"Frac(({self.num})/({self.den}))"

    def __str__(self):
        n = str(self.num)
        if self.den.is_one():
            return n
        return f"({n})/({self.den})"

    # -- evaluation / substitution ----------------------------------------
    def evaluate_mod(self, p: int, q0: int, z0: int = 1, w0: int = 1) -> int:
        """Image in GF(p) under q -> q0, z -> z0, w -> w0."""
        d = int(self.den(q0, z0, w0)) % p
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return int(self.num(q0, z0, w0)) % p * pow(d, -1, p) % p

    def substitute(self, name: str, value: "Frac") -> "Frac":
        """Replace variable ``name`` by the rational function ``value``."""
        return _subst_poly(self.num, _VARS[name], value) / _subst_poly(self.den, _VARS[name], value)

    def shift(self, name: str, c: int) -> "Frac":
        """Polynomial change of variables ``name -> name + c``."""
        gens = list(CTX.gens())
        gens[_VARS[name]] = gens[_VARS[name]] + c
        return Frac(self.num.compose(*gens), self.den.compose(*gens))

    def depends_on(self, name: str) -> bool:
        i = _VARS[name]
        return any(m[i] for m in self.num.monoms()) or any(m[i] for m in self.den.monoms())


def _coerce(x):
    if isinstance(x, Frac):
        return x
    if isinstance(x, (int, flint.fmpz)):
        return Frac(CTX.constant(int(x)), _reduced=True)
    if isinstance(x, flint.fmpz_mpoly):
        return Frac(x, _reduced=True)
    return NotImplemented


def _subst_poly(p: flint.fmpz_mpoly, idx: int, value: Frac) -> Frac:
    if value.den.is_one():
        gens = list(CTX.gens())
        gens[idx] = value.num
        return Frac(p.compose(*gens))
    by_deg: dict[int, flint.fmpz_mpoly] = {}
    for mon, c in p.to_dict().items():
        e = mon[idx]
        rest = list(mon)
        rest[idx] = 0
        by_deg[e] = by_deg.get(e, ZERO_POLY) + CTX.from_dict({tuple(rest): c})
    top = max(by_deg, default=0)
    num = ZERO_POLY
    for e, c in by_deg.items():
        num += c * value.num ** e * value.den ** (top - e)
    return Frac(num, value.den ** top)


ZERO = Frac(_reduced=True)
ONE = Frac(ONE_POLY, _reduced=True)
q = Frac.var("q")
z = Frac.var("z")
w = Frac.var("w")


def qint(n: int) -> Frac:
    """Quantum integer [n]_q = (q^n - q^-n) / (q - q^-1)."""
    return (Frac.q_pow(n) - Frac.q_pow(-n)) / (Frac.q_pow(1) - Frac.q_pow(-1))


def qfactorial(n: int) -> Frac:
    out = ONE
    for k in range(1, n + 1):
        out = out * qint(k)
    return out


def t_expansion(f: Frac, var: str = "z", at: int = 1, order: int = 0) -> tuple[int, list[Frac]]:
    """Laurent data of ``f`` around ``var = at``.

    Returns ``(v, coeffs)`` where ``v`` is the valuation in ``t = var - at`` and
    ``coeffs[k]`` is the coefficient of ``t**(v + k)`` for ``v + k <= order``.
    Coefficients are free of ``var``.
    """
    if f.is_zero():
        return (10 ** 9, [])
    g = f.shift(var, at)
    idx = _VARS[var]
    num = _split_by_degree(g.num, idx)
    den = _split_by_degree(g.den, idx)
    vn, vd = min(num), min(den)
    v = vn - vd
    count = order - v + 1
    if count <= 0:
        return (v, [])
    n = [Frac(num.get(vn + k, ZERO_POLY)) for k in range(count)]
    d = [Frac(den.get(vd + k, ZERO_POLY)) for k in range(count)]
    d0inv = d[0].inverse()
    coeffs: list[Frac] = []
    for k in range(count):
        acc = n[k]
        for j in range(1, k + 1):
            if not d[j].is_zero():
                acc = acc - d[j] * coeffs[k - j]
        coeffs.append(acc * d0inv)
    return (v, coeffs)


def _split_by_degree(p: flint.fmpz_mpoly, idx: int) -> dict[int, flint.fmpz_mpoly]:
    out: dict[int, flint.fmpz_mpoly] = {}
    for mon, c in p.to_dict().items():
        rest = list(mon)
        e = rest[idx]
        rest[idx] = 0
        out[e] = out.get(e, ZERO_POLY) + CTX.from_dict({tuple(rest): c})
    return out

"""q-characters: Z-linear combinations of monomials.

Fundamental q-characters in untwisted types come from a Frenkel-Mukhin style
completion.  For sl2-hat every simple character is a product of string
characters, one per string in the general-position decomposition of its
highest monomial.
"""

from __future__ import annotations

import heapq
from collections import Counter, defaultdict
from itertools import product as iproduct

import flint

from .cartan import CartanData, build_cartan, AffineType
from .monomial import (
    Monomial,
    SpectralParam,
    a_monomial,
    truncate,
    weight_of,
)
from .notation import format_qchar

SL2 = build_cartan(AffineType("A", 1))


class QCharacter:
    """Finitely supported map Monomial -> nonzero integer."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out: dict[Monomial, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for m, c in items:
                if isinstance(m, int) and isinstance(c, Monomial):
                    m, c = c, m
                out[m] = out.get(m, 0) + int(c)
        self.terms = {m: c for m, c in out.items() if c != 0}

    @classmethod
    def of(cls, m: Monomial) -> "QCharacter":
        return cls({m: 1})

    @classmethod
    def one(cls) -> "QCharacter":
        return cls({Monomial(): 1})

    def __add__(self, other: "QCharacter") -> "QCharacter":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return QCharacter(out)

    def __neg__(self):
        return QCharacter({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n: int) -> "QCharacter":
        return QCharacter({m: c * n for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, Monomial):
            return QCharacter({m * other: c for m, c in self.terms.items()})
        out: dict[Monomial, int] = defaultdict(int)
        for m, c in self.terms.items():
            for m2, c2 in other.terms.items():
                out[m * m2] += c * c2
        return QCharacter(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QCharacter):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def dimension(self) -> int:
        return sum(self.terms.values())

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.ordered()]

    def ordered(self) -> list[tuple[Monomial, int]]:
        """Terms sorted by decreasing total degree, then canonically."""
        return sorted(self.terms.items(), key=lambda mc: (-mc[0].degree(), mc[0].sort_key()))

    def shift(self, dl: int) -> "QCharacter":
        return QCharacter({m.shift(dl): c for m, c in self.terms.items()})

    def to_json(self) -> list[dict]:
        from .notation import format_monomial

        return [{"mono": format_monomial(m), "mult": c} for m, c in self.ordered()]

    def __str__(self):
        return format_qchar(self.ordered())

    def __repr__(self):
        return f"QCharacter({str(self)!r})"


def add(x: QCharacter, y: QCharacter) -> QCharacter:
    return x + y


def scale(x: QCharacter, n: int) -> QCharacter:
    return x.scale(n)


def multiply(x: QCharacter, y: QCharacter) -> QCharacter:
    return x * y


# -- weights ------------------------------------------------------------------------


def _root_coords(cd: CartanData):
    n = cd.n
    mat = flint.fmpq_mat(n, n, [cd.finite_C[i][j] for i in range(n) for j in range(n)])
    inv = mat.inv()

    def coords(w):
        v = inv * flint.fmpq_mat(n, 1, list(w))
        return tuple(v[k, 0] for k in range(n))

    return coords


def highest_monomial(chi: QCharacter, cd: CartanData) -> Monomial:
    """The unique monomial whose weight dominates every other weight."""
    if not chi.terms:
        raise ValueError("zero q-character has no highest monomial")
    coords = _root_coords(cd)
    data = [(m, coords(weight_of(m, cd))) for m in chi.terms]
    found = []
    for m, x in data:
        ok = True
        for _, y in data:
            for a, b in zip(x, y):
                diff = a - b
                if diff < 0 or diff.q != 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(m)
    if len(found) != 1:
        raise ValueError("no unique highest monomial")
    return found[0]


def a_factorization(quotient: Monomial, cd: CartanData) -> Counter | None:
    """Write ``quotient`` as a product of A_{j,b} with non-negative exponents.

    Untwisted types only.  Returns a Counter over (j, b) or None.  The top
    variable of A_{j,b} is Y_{j, b q^{r_j}}, which has the largest q-exponent
    among its factors, so peeling the highest variable is forced.
    """
    if cd.twist_order != 1:
        raise ValueError("A-factorization is implemented for untwisted types")
    out: Counter = Counter()
    rest = quotient
    guard = 0
    while not rest.is_one():
        guard += 1
        if guard > 10000:
            return None
        # highest q-exponent, orbits taken one at a time
        (j, a), e = max(rest.items(), key=lambda kv: (kv[0][1].orbit, kv[0][1].l, kv[0][0]))
        if e < 0:
            return None
        b = a.shift(-int(cd.r[j]))
        out[(j, b)] += e
        rest = rest * a_monomial(cd, j, b) ** (-e)
    return out


# -- sl2 strings ----------------------------------------------------------------------


def string_decompose(M: Monomial, node: int = 1, step: int = 2) -> list[tuple[SpectralParam, int]]:
    """General-position string decomposition of the node-``node`` part of M.

    Greedy: take the lowest available parameter and extend it by ``step`` while
    possible.  Output is sorted by (orbit, k, l).
    """
    pool: Counter = Counter()
    for (i, a), e in M.items():
        if i != node:
            continue
        if e < 0:
            raise ValueError(f"{M} is not dominant in direction {node}")
        pool[a] += e
    out = []
    while pool:
        a = min(pool, key=lambda p: (p.orbit, p.k, p.l))
        k = 0
        cur = a
        while pool.get(cur, 0) > 0:
            pool[cur] -= 1
            if pool[cur] == 0:
                del pool[cur]
            k += 1
            cur = cur.shift(step)
        out.append((a, k))
    return out


def _string_a_params(a: SpectralParam, k: int, rj: int) -> list[list[SpectralParam]]:
    """A-parameter lists for the k+1 terms of one string, from the top down."""
    top = [a.shift(2 * rj * s) for s in range(k)]
    opts = [[]]
    for t in range(1, k + 1):
        opts.append([top[k - u].shift(rj) for u in range(1, t + 1)])
    return opts


def string_qchar(a: SpectralParam, k: int) -> QCharacter:
    """q-character of the sl2 string module with parameters a, aq^2, ..., aq^{2(k-1)}."""
    top = Monomial({(1, a.shift(2 * s)): 1 for s in range(k)})
    out = {}
    for params in _string_a_params(a, k, 1):
        m = top
        for b in params:
            m = m * a_monomial(SL2, 1, b).inv()
        out[m] = out.get(m, 0) + 1
    return QCharacter(out)


def sl2_simple_qchar(M: Monomial) -> QCharacter:
    """q-character of the sl2-hat simple module L(M)."""
    for (i, _), e in M.items():
        if i != 1:
            raise ValueError("sl2 monomials use node 1 only")
        if e < 0:
            raise ValueError(f"{M} is not dominant")
    out = QCharacter.one()
    for a, k in string_decompose(M):
        out = out * string_qchar(a, k)
    return out


# -- Frenkel-Mukhin completion --------------------------------------------------------


class CompletionError(RuntimeError):
    pass


def _direction_expansion(m: Monomial, j: int, cd: CartanData) -> Counter:
    """Counter over sorted tuples of A_{j,.} parameters for the j-string character."""
    rj = int(cd.r[j])
    strings = string_decompose(m.part(j), node=j, step=2 * rj)
    options = [_string_a_params(a, k, rj) for a, k in strings]
    out: Counter = Counter()
    for combo in iproduct(*options):
        params = tuple(sorted((p for lst in combo for p in lst), key=lambda p: (p.orbit, p.l, p.k)))
        out[params] += 1
    return out


def fm_completion(cd: CartanData, top: Monomial, cap: int = 20000) -> QCharacter:
    """Frenkel-Mukhin completion from a dominant top monomial (untwisted types)."""
    if cd.twist_order != 1:
        raise CompletionError("the completion algorithm is restricted to untwisted types")
    if not top.is_dominant():
        raise ValueError(f"{top} is not dominant")
    coloured: dict[Monomial, dict[int, int]] = defaultdict(dict)
    height = {top: 0}
    heap = [(0, top.sort_key(), top)]
    seen = {top}
    result: dict[Monomial, int] = {}
    a_cache: dict = {}

    def amon(j, b):
        key = (j, b)
        if key not in a_cache:
            a_cache[key] = a_monomial(cd, j, b).inv()
        return a_cache[key]

    while heap:
        h, _, m = heapq.heappop(heap)
        if len(result) >= cap:
            raise CompletionError(f"completion exceeded {cap} monomials")
        cols = coloured[m]
        s = 1 if m == top else max(cols.values())
        for j in cd.nodes:
            sj = cols.get(j, 0)
            if m.is_j_dominant(j):
                extra = s - sj
                if extra < 0:
                    raise CompletionError(f"direction {j} overcounts {m}")
                if extra:
                    for params, mult in _direction_expansion(m, j, cd).items():
                        if not params:
                            continue
                        m2 = m
                        for b in params:
                            m2 = m2 * amon(j, b)
                        c2 = coloured[m2]
                        c2[j] = c2.get(j, 0) + extra * mult
                        if m2 not in seen:
                            seen.add(m2)
                            height[m2] = h + len(params)
                            heapq.heappush(heap, (h + len(params), m2.sort_key(), m2))
                cols[j] = s
            elif sj != s:
                raise CompletionError(f"monomial {m} is not accounted for in direction {j}")
        result[m] = s
    return QCharacter(result)


def fm_fundamental(cd: CartanData, i: int, a: SpectralParam) -> QCharacter:
    """q-character of the fundamental module V_i(a) (untwisted types)."""
    if i not in cd.nodes:
        raise ValueError(f"node {i} is not in I")
    return fm_completion(cd, Monomial({(i, a): 1}))


# -- upper truncation -----------------------------------------------------------------


def truncate_upper(chi: QCharacter, M: Monomial, L: int) -> QCharacter:
    """Terms m of chi with m^{<=L-1} = M^{<=L-1}."""
    target = truncate(M, L)[1]
    orbits = M.orbits()
    out = {}
    for m, c in chi.terms.items():
        if orbits and not m.orbits() <= orbits:
            raise ValueError("q-character and monomial live on different orbits")
        if truncate(m, L)[1] == target:
            out[m] = c
    return QCharacter(out)


def useqt_sides(M: Monomial, L: int) -> tuple[QCharacter, QCharacter]:
    lhs = truncate_upper(sl2_simple_qchar(M), M, L)
    hi, lo = truncate(M, L)
    rhs = sl2_simple_qchar(hi) * lo
    return lhs, rhs


def verify_useqt(M: Monomial, L: int) -> bool:
    lhs, rhs = useqt_sides(M, L)
    return lhs == rhs

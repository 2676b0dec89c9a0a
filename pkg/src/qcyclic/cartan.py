"""Affine Cartan data.

Matrices follow Kac's tables with the convention ``C[i][j] = <alpha_i^vee, alpha_j>``,
so that ``diag(r) C`` is symmetric and the simple root alpha_i has
coordinates ``(C[j][i])_j`` in the fundamental weight basis.  For A_{2n}^{(2)}
the node numbering is reversed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

import flint

UNTWISTED = ("A", "B", "C", "D", "E", "F", "G")
TWISTED = ("A_even", "A_odd", "D_tw", "E6_tw", "D4_tw3")


@dataclass(frozen=True)
class AffineType:
    family: str
    n: int

    def __post_init__(self):
        if not _valid(self.family, self.n):
            raise ValueError(f"invalid affine type ({self.family}, {self.n})")

    @property
    def twist(self) -> int:
        if self.family in UNTWISTED:
            return 1
        return 3 if self.family == "D4_tw3" else 2

    @property
    def label(self) -> str:
        f, n = self.family, self.n
        if f in UNTWISTED:
            return f"{f}{n}~1"
        return {
            "A_even": f"A{2 * n}~2",
            "A_odd": f"A{2 * n - 1}~2",
            "D_tw": f"D{n + 1}~2",
            "E6_tw": "E6~2",
            "D4_tw3": "D4~3",
        }[f]

    def __str__(self):
        return self.label


def _valid(family: str, n: int) -> bool:
    if not isinstance(n, int) or n < 1:
        return False
    return {
        "A": n >= 1,
        "B": n >= 3,
        "C": n >= 2,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
        "A_even": n >= 1,
        "A_odd": n >= 3,
        "D_tw": n >= 2,
        "E6_tw": n == 4,
        "D4_tw3": n == 2,
    }.get(family, False)


_LABEL = re.compile(r"^\s*([A-G])(\d+)\s*~\s*([123])\s*$")


def parse_type(text: str) -> AffineType:
    """Parse labels such as ``A1~1``, ``A4~2``, ``D4~3``."""
    m = _LABEL.match(text)
    if not m:
        raise ValueError(f"cannot parse affine type {text!r}")
    letter, size, tw = m.group(1), int(m.group(2)), int(m.group(3))
    if tw == 1:
        return AffineType(letter, size)
    if tw == 3:
        if (letter, size) != ("D", 4):
            raise ValueError(f"no twisted type {text!r}")
        return AffineType("D4_tw3", 2)
    if letter == "A":
        if size % 2 == 0:
            return AffineType("A_even", size // 2)
        return AffineType("A_odd", (size + 1) // 2)
    if letter == "D":
        return AffineType("D_tw", size - 1)
    if (letter, size) == ("E", 6):
        return AffineType("E6_tw", 4)
    raise ValueError(f"no twisted type {text!r}")


def _matrix(size: int, edges: dict[tuple[int, int], int]) -> list[list[int]]:
    """Build a GCM; edges maps (i, j) -> a_ij, simple edges given once as -1."""
    c = [[0] * size for _ in range(size)]
    for i in range(size):
        c[i][i] = 2
    for (i, j), v in edges.items():
        c[i][j] = v
        if (j, i) not in edges:
            c[j][i] = -1 if v == -1 else c[j][i]
    return c


def _chain(edges: dict, nodes: list[int]):
    for a, b in zip(nodes, nodes[1:]):
        edges[(a, b)] = -1
        edges[(b, a)] = -1


def kac_matrix(t: AffineType) -> list[list[int]]:
    """Affine Cartan matrix in Kac numbering (before any reversal)."""
    f, n = t.family, t.n
    e: dict[tuple[int, int], int] = {}
    if f == "A":
        if n == 1:
            return [[2, -2], [-2, 2]]
        _chain(e, list(range(n + 1)) + [0])
    elif f == "B":
        _chain(e, [0, 2])
        _chain(e, list(range(1, n + 1)))
        e[(n, n - 1)] = -2
    elif f == "C":
        _chain(e, list(range(n + 1)))
        e[(1, 0)] = -2
        e[(n - 1, n)] = -2
    elif f == "D":
        _chain(e, [0, 2])
        _chain(e, list(range(1, n - 1)))
        _chain(e, [n - 2, n])
        _chain(e, [n - 2, n - 1])
    elif f == "E":
        if n == 6:
            _chain(e, [1, 3, 4, 5, 6])
            _chain(e, [2, 4])
            _chain(e, [0, 2])
        elif n == 7:
            _chain(e, [1, 3, 4, 5, 6, 7])
            _chain(e, [2, 4])
            _chain(e, [0, 1])
        else:
            _chain(e, [1, 3, 4, 5, 6, 7, 8])
            _chain(e, [2, 4])
            _chain(e, [0, 8])
    elif f == "F":
        _chain(e, [0, 1, 2, 3, 4])
        e[(3, 2)] = -2
    elif f == "G":
        _chain(e, [0, 1, 2])
        e[(2, 1)] = -3
    elif f == "A_even":
        if n == 1:
            return [[2, -4], [-1, 2]]
        _chain(e, list(range(n + 1)))
        e[(0, 1)] = -2
        e[(n - 1, n)] = -2
    elif f == "A_odd":
        _chain(e, [0, 2])
        _chain(e, list(range(1, n + 1)))
        e[(n - 1, n)] = -2
    elif f == "D_tw":
        _chain(e, list(range(n + 1)))
        e[(0, 1)] = -2
        e[(n, n - 1)] = -2
    elif f == "E6_tw":
        _chain(e, [0, 1, 2, 3, 4])
        e[(2, 3)] = -2
    elif f == "D4_tw3":
        _chain(e, [0, 1, 2])
        e[(1, 2)] = -3
    size = n + 1
    return _matrix(size, e)


def symmetrizer(c: list[list[int]]) -> list[Fraction]:
    """Positive rational r with diag(r) C symmetric and r_0 = 1."""
    size = len(c)
    r: list[Fraction | None] = [None] * size
    r[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(size):
            if j != i and c[i][j] != 0:
                # r_i c_ij = r_j c_ji
                val = r[i] * Fraction(c[i][j], c[j][i])
                if r[j] is None:
                    r[j] = val
                    stack.append(j)
                elif r[j] != val:
                    raise ValueError("matrix is not symmetrizable")
    if any(x is None for x in r):
        raise ValueError("matrix is decomposable")
    return r  # type: ignore[return-value]


@dataclass(frozen=True)
class CartanData:
    type: AffineType
    C: tuple
    r: tuple  # Fractions
    mu: tuple
    d: tuple  # d[i] for i in 1..n, stored at index i-1
    twist_order: int
    finite_C: tuple = field(repr=False)

    @property
    def n(self) -> int:
        return self.type.n

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    def d_of(self, i: int) -> int:
        return self.d[i - 1]

    def alpha(self, i: int) -> tuple:
        """Simple root alpha_i in the omega basis."""
        return tuple(self.C[j][i] for j in self.nodes)

    def as_dict(self) -> dict:
        return {
            "type": self.type.label,
            "C": [list(row) for row in self.C],
            "r": [str(x) for x in self.r],
            "mu": list(self.mu),
            "d": list(self.d),
            "twist_order": self.twist_order,
            "finite_C": [list(row) for row in self.finite_C],
        }


@lru_cache(maxsize=None)
def build_cartan(t: AffineType) -> CartanData:
    c = kac_matrix(t)
    if t.family == "A_even":
        size = len(c)
        c = [[c[size - 1 - i][size - 1 - j] for j in range(size)] for i in range(size)]
    n = t.n
    mu = [1] * (n + 1)
    if t.family == "A_even":
        mu[n] = 2
    r = symmetrizer(c)
    # rescale so mu_i r_i are coprime positive integers
    prods = [m * x for m, x in zip(mu, r)]
    den = 1
    for x in prods:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in prods]
    g = 0
    for v in ints:
        g = gcd(g, v)
    scale = Fraction(den, g)
    r = [x * scale for x in r]
    # d_i = r_i exactly when r_i equals the twist order and exceeds 1
    tw = t.twist
    d = tuple(tw if (tw > 1 and r[i] == tw) else 1 for i in range(1, n + 1))
    finite = tuple(tuple(c[i][j] for j in range(1, n + 1)) for i in range(1, n + 1))
    return CartanData(
        type=t,
        C=tuple(tuple(row) for row in c),
        r=tuple(r),
        mu=tuple(mu),
        d=d,
        twist_order=t.twist,
        finite_C=finite,
    )


def cartan(label: str) -> CartanData:
    return build_cartan(parse_type(label))


def all_small_types(max_rank: int = 5) -> list[AffineType]:
    out = []
    for fam in UNTWISTED + TWISTED:
        for n in range(1, max_rank + 1):
            if _valid(fam, n):
                out.append(AffineType(fam, n))
    for n in (6, 7, 8):
        if n > max_rank:
            out.append(AffineType("E", n))
    return out


# -- weights -------------------------------------------------------------


def weight_leq(a, b, cd: CartanData) -> bool:
    """True iff b - a is a non-negative integer combination of simple roots."""
    diff = [int(y) - int(x) for x, y in zip(a, b)]
    if len(diff) != cd.n:
        raise ValueError("weight has wrong length")
    if not any(diff):
        return True
    n = cd.n
    # columns of finite_C are the simple roots
    mat = flint.fmpq_mat(n, n, [cd.finite_C[i][j] for i in range(n) for j in range(n)])
    rhs = flint.fmpq_mat(n, 1, diff)
    sol = mat.solve(rhs)
    for k in range(n):
        x = sol[k, 0]
        if x < 0 or x.q != 1:
            return False
    return True


def weight_add(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))

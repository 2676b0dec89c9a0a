"""Decidable cyclicity criteria on monomials.

A fundamental list ``[(i_1, a_1), ..., (i_R, a_R)]`` stands for the tensor
product V_{i_R}(a_R) (x) ... (x) V_{i_1}(a_1): position 1 is the rightmost
factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .cartan import CartanData
from .monomial import Monomial, SpectralParam

FundamentalList = list  # of (i, SpectralParam)

CYCLIC = "Cyclic"
INCONCLUSIVE = "Inconclusive"


def fundamental_order_ok(fl: FundamentalList, cd: CartanData | None = None) -> bool:
    """No ratio a_p / a_r (r < p) lies in eps^Z q^{-N*}."""
    if cd is not None:
        for i, _ in fl:
            if i not in cd.nodes:
                raise ValueError(f"node {i} is not in I")
    for p in range(len(fl)):
        ap = fl[p][1]
        for r in range(p):
            ar = fl[r][1]
            if ap.orbit == ar.orbit and ap.l - ar.l < 0:
                return False
    return True


def admissible_factorization(M: Monomial, cd: CartanData | None = None) -> FundamentalList:
    """Fundamental factors of M sorted by orbit label, then ascending l (stable)."""
    if not M.is_dominant():
        raise ValueError(f"{M} is not dominant")
    flat: list[tuple[int, SpectralParam]] = []
    for (_, i, l, k), e in M.sort_key():
        flat.extend([(i, SpectralParam(_, l, k))] * e)
    flat.sort(key=lambda ia: (ia[1].orbit, ia[1].l))
    if not fundamental_order_ok(flat, cd):
        raise AssertionError("admissible factorization violates the ordering condition")
    return flat


def pairwise_cyclic_sufficient(m: Monomial, m2: Monomial, cd: CartanData | None = None) -> bool:
    """On every shared orbit, every l in m2 is at most every l in m.

    When this holds L(m) (x) L(m2) is cyclic.
    """
    if not (m.is_dominant() and m2.is_dominant()):
        raise ValueError("both monomials must be dominant")
    lo: dict[str, int] = {}
    for (_, a) in m.keys():
        lo[a.orbit] = min(lo.get(a.orbit, a.l), a.l)
    for (_, a) in m2.keys():
        if a.orbit in lo and a.l > lo[a.orbit]:
            return False
    return True


@dataclass
class CyclicVerdict:
    status: str
    pairs: list = field(default_factory=list)
    oracle: str = ""

    @property
    def cyclic(self) -> bool:
        return self.status == CYCLIC

    def failing(self) -> list:
        return [p for p in self.pairs if not p["result"]]

    def to_json(self) -> dict:
        return {"schema": 1, "status": self.status, "pairs": list(self.pairs)}


def maincyc_conclude(ms: list[Monomial], pairwise: Callable[[int, int], bool], oracle: str = "symbolic") -> CyclicVerdict:
    """Cyclic if every pair (i < j, 0-based) passes ``pairwise``; else Inconclusive.

    A failing pair never yields a negative verdict: the inference only goes one way.
    """
    for m in ms:
        if not m.is_dominant():
            raise ValueError(f"{m} is not dominant")
    pairs = []
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            pairs.append({"i": i, "j": j, "oracle": oracle, "result": bool(pairwise(i, j))})
    status = CYCLIC if all(p["result"] for p in pairs) else INCONCLUSIVE
    return CyclicVerdict(status, pairs, oracle)


def symbolic_pairwise(ms: list[Monomial], cd: CartanData | None = None) -> Callable[[int, int], bool]:
    return lambda i, j: pairwise_cyclic_sufficient(ms[i], ms[j], cd)


def oracle_pairwise(ms: list[Monomial]) -> Callable[[int, int], bool]:
    """Brute-force sl2-hat oracle on L(ms[i]) (x) L(ms[j])."""
    from .sl2 import is_cyclic_product, simple_module

    return lambda i, j: is_cyclic_product([simple_module(ms[i]), simple_module(ms[j])])

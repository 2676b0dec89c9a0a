"""Desk-scale validation sweeps over small sl2-hat simple modules."""

from __future__ import annotations

import random
from itertools import product

from .criteria import fundamental_order_ok, maincyc_conclude, pairwise_cyclic_sufficient
from .monomial import Monomial, plus_minus_split, sp
from .sl2 import eval_module, is_cyclic_product, simple_module, trivial_module

SUPPORT = (0, 2, 4)
MAX_EXP = 2
MAX_TRIPLE_DIM = 64


def desk_monomials(support=SUPPORT, max_exp: int = MAX_EXP) -> list[Monomial]:
    """Every non-trivial dominant monomial on ``support`` with exponents <= max_exp."""
    out = []
    for exps in product(range(max_exp + 1), repeat=len(support)):
        if any(exps):
            out.append(Monomial({(1, sp(l)): e for l, e in zip(support, exps) if e}))
    return out


def module(M: Monomial):
    return trivial_module() if M.is_one() else simple_module(M)


def oracle(ms: list[Monomial]) -> bool:
    return is_cyclic_product([module(m) for m in ms])


class Desk:
    """Memoized oracle verdicts over the enumeration."""

    def __init__(self, support=SUPPORT, max_exp: int = MAX_EXP, max_dim: int = MAX_TRIPLE_DIM):
        self.monos = desk_monomials(support, max_exp)
        self.max_dim = max_dim
        self.dims = {m: simple_module(m).dim for m in self.monos}
        self._pair: dict = {}

    def pair(self, a: Monomial, b: Monomial) -> bool:
        key = (a, b)
        if key not in self._pair:
            self._pair[key] = oracle([a, b])
        return self._pair[key]

    def triples(self):
        for t in product(self.monos, repeat=3):
            if self.dims[t[0]] * self.dims[t[1]] * self.dims[t[2]] <= self.max_dim:
                yield t


def triples_sweep(desk: Desk) -> dict:
    """All-pairs-cyclic triples must have a cyclic triple product."""
    checked = 0
    bad = []
    for t in desk.triples():
        verdict = maincyc_conclude(list(t), lambda i, j: desk.pair(t[i], t[j]), oracle="sl2")
        if not verdict.cyclic:
            continue
        checked += 1
        if not oracle(list(t)):
            bad.append(t)
    return {"triples": sum(1 for _ in desk.triples()), "all_pairs_cyclic": checked, "counterexamples": bad}


def upper_parts_sweep(desk: Desk) -> dict:
    """L(M+) (x) L(M'+) is cyclic whenever L(M) (x) L(M') is."""
    checked = 0
    bad = []
    for a, b in product(desk.monos, repeat=2):
        if not desk.pair(a, b):
            continue
        checked += 1
        if not oracle([plus_minus_split(a)[0], plus_minus_split(b)[0]]):
            bad.append((a, b))
    return {"cyclic_pairs": checked, "counterexamples": bad}


def four_factor_sweep(desk: Desk) -> dict:
    """S_{1,+} (x) S_2 (x) S_3 (x) S_{1,-} is cyclic for all-pairs-cyclic triples."""
    checked = 0
    bad = []
    for t in desk.triples():
        if not all(desk.pair(t[i], t[j]) for i, j in ((0, 1), (0, 2), (1, 2))):
            continue
        checked += 1
        plus, minus = plus_minus_split(t[0])
        if not oracle([plus, t[1], t[2], minus]):
            bad.append(t)
    return {"all_pairs_cyclic": checked, "counterexamples": bad}


def criterion_sweep(desk: Desk) -> dict:
    """pairwise_cyclic_sufficient never claims a pair the oracle rejects."""
    claimed = 0
    bad = []
    for a, b in product(desk.monos, repeat=2):
        if pairwise_cyclic_sufficient(a, b):
            claimed += 1
            if not desk.pair(a, b):
                bad.append((a, b))
    return {"pairs": len(desk.monos) ** 2, "claimed": claimed, "counterexamples": bad}


def random_fundamental_lists(seed: int, count: int = 50, max_len: int = 4, lmax: int = 8) -> list[list]:
    """Seeded random lists passing fundamental_order_ok."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_len)
        fl = [(1, sp(rng.randint(0, lmax))) for _ in range(n)]
        if fundamental_order_ok(fl):
            out.append(fl)
    return out


def ordered_lists_sweep(seed: int = 0, count: int = 50) -> dict:
    """Tensor V(a_R) (x) ... (x) V(a_1) must be cyclic for ordered lists."""
    lists = random_fundamental_lists(seed, count)
    bad = []
    for fl in lists:
        reps = [eval_module(a.l) for _, a in reversed(fl)]
        if not is_cyclic_product(reps):
            bad.append(fl)
    return {"lists": len(lists), "counterexamples": bad}

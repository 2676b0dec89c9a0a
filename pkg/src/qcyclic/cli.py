"""Command-line front end.

Exit codes: 0 success or true, 1 false or inconclusive, 2 usage error,
3 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .cartan import build_cartan, parse_type
from .criteria import (
    admissible_factorization,
    fundamental_order_ok,
    maincyc_conclude,
    oracle_pairwise,
    pairwise_cyclic_sufficient,
    symbolic_pairwise,
)
from .fields import ONE
from .intertwiner import PoleError, check_hexagon, laurent_at_1, solve_T, valuation_at_1
from .linalg import inverse, rank
from .monomial import a_monomial, orbit_factorize, plus_minus_split, sp, truncate
from .notation import MonomialSyntaxError, format_monomial, format_param, parse_monomial
from .qchar import CompletionError, fm_fundamental, sl2_simple_qchar
from .sl2 import ConventionError, eval_module, is_cyclic_product, simple_module, trivial_module
from .worked import example_suite

SCHEMA = 1


class UsageError(Exception):
    pass


class Outcome:
    def __init__(self, payload: dict, text: str, truth: bool = True):
        self.payload = {"schema": SCHEMA, **payload}
        self.text = text
        self.truth = truth


def _mono(s: str):
    return parse_monomial(s)


def _module(M):
    return trivial_module() if M.is_one() else simple_module(M)


def cmd_cartan(a):
    cd = build_cartan(parse_type(a.type))
    rows = "\n".join(" ".join(f"{x:>3}" for x in row) for row in cd.C)
    text = f"{cd.type.label}\nC =\n{rows}\nr = {[str(x) for x in cd.r]}\nd = {list(cd.d)}"
    return Outcome(cd.as_dict(), text)


def cmd_amonomial(a):
    cd = build_cartan(parse_type(a.type))
    m = a_monomial(cd, a.i, sp(a.l, a.k))
    s = format_monomial(m)
    return Outcome({"type": cd.type.label, "i": a.i, "l": a.l, "k": a.k, "A": s}, s)


def cmd_qchar(a):
    if a.fundamental:
        i, l = a.fundamental
        cd = build_cartan(parse_type(a.type))
        chi = fm_fundamental(cd, i, sp(l))
    else:
        if a.mono is None:
            raise UsageError("qchar needs a monomial or --fundamental i l")
        chi = sl2_simple_qchar(_mono(a.mono))
    return Outcome({"terms": chi.to_json(), "dimension": chi.dimension()}, str(chi))


def cmd_truncate(a):
    hi, lo = truncate(_mono(a.mono), a.L)
    h, l = format_monomial(hi), format_monomial(lo)
    return Outcome({"geq": h, "lt": l}, f">= {a.L}: {h}\n<  {a.L}: {l}")


def cmd_split(a):
    p, m = plus_minus_split(_mono(a.mono))
    s1, s2 = format_monomial(p), format_monomial(m)
    return Outcome({"plus": s1, "minus": s2}, f"M+ = {s1}\nM- = {s2}")


def cmd_factorize(a):
    parts = {o: format_monomial(m) for o, m in orbit_factorize(_mono(a.mono)).items()}
    return Outcome({"orbits": parts}, "\n".join(f"{o}: {m}" for o, m in parts.items()))


def cmd_order(a):
    fl = admissible_factorization(_mono(a.mono))
    items = [format_param(i, x) for i, x in fl]
    return Outcome({"factors": items}, "  ".join(f"{n + 1}:{t}" for n, t in enumerate(items)))


def cmd_check_order(a):
    fl = []
    for t in a.terms:
        m = _mono(t)
        items = list(m.items())
        if len(items) != 1 or items[0][1] != 1:
            raise UsageError(f"{t!r} is not a single fundamental variable")
        fl.append(items[0][0])
    ok = fundamental_order_ok(fl)
    return Outcome({"ok": ok}, str(ok).lower(), ok)


def cmd_pairwise(a):
    ok = pairwise_cyclic_sufficient(_mono(a.m1), _mono(a.m2))
    return Outcome({"sufficient": ok}, str(ok).lower(), ok)


def cmd_maincyc(a):
    ms = [_mono(s) for s in a.monos]
    if a.oracle:
        v = maincyc_conclude(ms, oracle_pairwise(ms), oracle="sl2")
    else:
        v = maincyc_conclude(ms, symbolic_pairwise(ms), oracle="symbolic")
    lines = [v.status] + [f"  pair ({p['i']},{p['j']}): {'ok' if p['result'] else 'fails'}" for p in v.pairs]
    return Outcome(v.to_json(), "\n".join(lines), v.cyclic)


def cmd_oracle_cyclic(a):
    ms = [_mono(s) for s in a.monos]
    ok = is_cyclic_product([_module(m) for m in ms])
    return Outcome({"cyclic": ok}, str(ok).lower(), ok)


def cmd_simple(a):
    M = _mono(a.mono)
    r = _module(M)
    ws = sorted(r.weights, reverse=True)
    return Outcome({"monomial": format_monomial(M), "dim": r.dim, "weights": ws}, f"dim {r.dim}\nweights {ws}")


def cmd_intertwine(a):
    m1, m2 = _mono(a.m1), _mono(a.m2)
    w, w2 = _module(m1), _module(m2)
    t = solve_T(w, w2)
    v_t = valuation_at_1(t)
    tinv = inverse(t.matrix)
    v_inv = valuation_at_1(tinv)
    out = {"dim": t.dim, "T_valuation_at_1": v_t, "Tinv_valuation_at_1": v_inv}
    if v_t >= 0:
        i_mat = laurent_at_1(t, 0)
        out["rank_I"] = rank(i_mat)
        out["kernel_I"] = t.dim - out["rank_I"]
    else:
        out["rank_I"] = None
    if v_inv == -1:
        out["rank_residue_inverse"] = rank(laurent_at_1(tinv, -1))
    pole = "none" if v_t >= 0 else f"order {-v_t}"
    text = f"T is {t.dim}x{t.dim}; pole of T at z=1: {pole}; min valuation of T^-1: {v_inv}"
    if out["rank_I"] is not None:
        text += f"\nrank I = {out['rank_I']}, kernel = {out['kernel_I']}"
    return Outcome(out, text, v_t >= 0)


def cmd_hexagon(a):
    ok = check_hexagon(*(eval_module(l) for l in (a.l1, a.l2, a.l3)))
    return Outcome({"holds": ok}, str(ok).lower(), ok)


def cmd_examples(a):
    rep = example_suite(a.n)
    lines = [f"Example {a.n}: {'pass' if rep['pass'] else 'FAIL'}"]
    for c in rep["checks"]:
        lines.append(f"  {c['name']}: got {c['got']}, expected {c['expected']} [{'ok' if c['pass'] else 'mismatch'}]")
    for k, v in rep.get("info", {}).items():
        lines.append(f"  (info) {k} = {v}")
    return Outcome(rep, "\n".join(lines), rep["pass"])


def cmd_selftest(a):
    results = []
    lines = []
    only = set(a.only) if a.only else None
    for n, *_ in acceptance.CRITERIA:
        if only and n not in only:
            continue
        r = acceptance.run_criterion(n, a.seed)
        results.append(r)
        lines.append(acceptance.format_line(r))
        if not a.json:
            print(lines[-1], flush=True)
    ok = all(r["pass"] for r in results)
    text = "" if not a.json else "\n".join(lines)
    return Outcome({"criteria": results, "pass": ok}, text, ok)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcyclic", description="Exact cyclicity toolkit for quantum affine algebras")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="also write the output to this file")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("cartan")
    s.add_argument("type")
    s.set_defaults(fn=cmd_cartan)

    s = sub.add_parser("amonomial")
    s.add_argument("type")
    s.add_argument("i", type=int)
    s.add_argument("l", type=int)
    s.add_argument("k", type=int, nargs="?", default=0)
    s.set_defaults(fn=cmd_amonomial)

    s = sub.add_parser("qchar")
    s.add_argument("mono", nargs="?")
    s.add_argument("--fundamental", nargs=2, type=int, metavar=("I", "L"))
    s.add_argument("--type", default="A1~1")
    s.set_defaults(fn=cmd_qchar)

    s = sub.add_parser("truncate")
    s.add_argument("mono")
    s.add_argument("L", type=int)
    s.set_defaults(fn=cmd_truncate)

    for name, fn in (("split", cmd_split), ("factorize", cmd_factorize), ("order", cmd_order), ("simple", cmd_simple)):
        s = sub.add_parser(name)
        s.add_argument("mono")
        s.set_defaults(fn=fn)

    s = sub.add_parser("check-order", help="fundamental variables, position 1 first")
    s.add_argument("terms", nargs="+")
    s.set_defaults(fn=cmd_check_order)

    for name, fn in (("pairwise", cmd_pairwise), ("intertwine", cmd_intertwine)):
        s = sub.add_parser(name)
        s.add_argument("m1")
        s.add_argument("m2")
        s.set_defaults(fn=fn)

    s = sub.add_parser("maincyc")
    s.add_argument("monos", nargs="+")
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(fn=cmd_maincyc)

    s = sub.add_parser("oracle-cyclic")
    s.add_argument("monos", nargs="+")
    s.set_defaults(fn=cmd_oracle_cyclic)

    s = sub.add_parser("hexagon")
    for n in ("l1", "l2", "l3"):
        s.add_argument(n, type=int)
    s.set_defaults(fn=cmd_hexagon)

    s = sub.add_parser("examples")
    s.add_argument("n", type=int, choices=(1, 2, 3))
    s.set_defaults(fn=cmd_examples)

    s = sub.add_parser("selftest")
    s.add_argument("--only", type=int, nargs="*")
    s.set_defaults(fn=cmd_selftest)
    return p


def _emit(text: str, out: str | None):
    if text:
        print(text)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        res = a.fn(a)
    except (UsageError, MonomialSyntaxError, ValueError, KeyError) as exc:
        err = {"schema": SCHEMA, "error": "usage", "message": str(exc)}
        print(json.dumps(err) if a.json else f"error: {exc}", file=sys.stderr)
        return 2
    except (ConventionError, CompletionError, PoleError, ArithmeticError, AssertionError, RuntimeError) as exc:
        err = {"schema": SCHEMA, "error": "contract", "message": f"{type(exc).__name__}: {exc}"}
        print(json.dumps(err) if a.json else f"contract violation: {exc}", file=sys.stderr)
        return 3
    text = json.dumps(res.payload, indent=2, default=str) if a.json else res.text
    _emit(text, a.out)
    return 0 if res.truth else 1


if __name__ == "__main__":
    sys.exit(main())

"""Text form of monomials and q-characters.

Grammar::

    term := (label '@')? 'Y' '[' i ';' l (';' k)? ']' ('^' int)?
    expr := term ('*' term)* | '1'

``k`` is omitted on output when it is zero, and the orbit prefix is omitted for
the default orbit ``c``.
"""

from __future__ import annotations

import re

from .monomial import DEFAULT_ORBIT, Monomial, SpectralParam


class MonomialSyntaxError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_INT = r"[+-]?\d+"
_TERM = re.compile(
    r"\s*(?:(?P<orbit>[A-Za-z_][A-Za-z0-9_]*)@)?Y\[\s*(?P<i>\d+)\s*;\s*(?P<l>"
    + _INT
    + r")\s*(?:;\s*(?P<k>"
    + _INT
    + r")\s*)?\](?:\^(?P<e>"
    + _INT
    + r"))?\s*"
)


def parse_monomial(text: str) -> Monomial:
    s = text.strip()
    if s == "1":
        return Monomial()
    if not s:
        raise MonomialSyntaxError(text, 0, "empty monomial")
    pos = 0
    # offset of s inside text, for error positions
    base = len(text) - len(text.lstrip())
    factors = []
    while True:
        m = _TERM.match(s, pos)
        if not m:
            raise MonomialSyntaxError(text, base + pos, "expected a factor Y[i;l;k]^e")
        e = int(m.group("e")) if m.group("e") is not None else 1
        if e == 0:
            raise MonomialSyntaxError(text, base + m.start("e"), "exponent 0 is not allowed")
        i = int(m.group("i"))
        if i < 1:
            raise MonomialSyntaxError(text, base + m.start("i"), "node index must be positive")
        a = SpectralParam(m.group("orbit") or DEFAULT_ORBIT, int(m.group("l")), int(m.group("k") or 0))
        factors.append(((i, a), e))
        pos = m.end()
        if pos == len(s):
            break
        if s[pos] != "*":
            raise MonomialSyntaxError(text, base + pos, "expected '*'")
        pos += 1
    return Monomial(factors)


def format_param(i: int, a: SpectralParam) -> str:
    prefix = "" if a.orbit == DEFAULT_ORBIT else f"{a.orbit}@"
    inner = f"{i};{a.l}" if a.k == 0 else f"{i};{a.l};{a.k}"
    return f"{prefix}Y[{inner}]"


def format_monomial(m: Monomial) -> str:
    if m.is_one():
        return "1"
    parts = []
    for ((orbit, i, l, k), e) in m.sort_key():
        s = format_param(i, SpectralParam(orbit, l, k))
        if e != 1:
            s += f"^{e}"
        parts.append(s)
    return "*".join(parts)


def format_qchar(terms: list[tuple[Monomial, int]]) -> str:
    """Join ``[(m, mult), ...]`` in the given order, e.g. ``Y[1;0] + Y[1;2]^-1``."""
    if not terms:
        return "0"
    out = []
    for n, (m, c) in enumerate(terms):
        body = format_monomial(m)
        mag = abs(c)
        piece = body if mag == 1 else f"{mag}*{body}"
        if n == 0:
            out.append(piece if c > 0 else f"-{piece}")
        else:
            out.append(f" + {piece}" if c > 0 else f" - {piece}")
    return "".join(out)


def parse_qchar(text: str) -> list[tuple[Monomial, int]]:
    """Inverse of format_qchar."""
    s = text.strip()
    if s == "0":
        return []
    chunks = re.split(r"\s+([+-])\s+", s)
    signs = ["+"] + chunks[1::2]
    bodies = chunks[0::2]
    out = []
    for sign, body in zip(signs, bodies):
        body = body.strip()
        c = 1
        if body.startswith("-"):
            c, body = -1, body[1:]
        m = re.match(r"^(\d+)\*(.*)$", body)
        if m and not body.startswith("Y"):
            c *= int(m.group(1))
            body = m.group(2)
        if sign == "-":
            c = -c
        out.append((parse_monomial(body), c))
    return out

"""Text syntax for elements of A_n.

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := 'y'INT('^'INT)? | 'x'INT | 'xp'INT | 'c'INT | 'e'INT | 'ep'INT
            | 'b'INT | 'd'INT | 'dp'INT | '1' | '0'

``cK`` is the K-th Chern class, ``eK``/``epK`` the degree-K exterior class
and its pi'-twist (K odd), ``b2 b3 d3 dp3 d5 dp5`` the limit generators of
A_2.  Whitespace is ignored.
"""

from __future__ import annotations

import re

from .algebra import Element
from .classes import Variant, chern, limit_class, quillen_e


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<op>[+*^])|(?P<gen>xp|ep|dp|[yxcebd])(?P<idx>\d+)|(?P<const>\d+))")


def _tokens(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.end() - len(m.group().lstrip())
        if m.group("op"):
            yield "op", m.group("op"), start
        elif m.group("gen"):
            yield "gen", (m.group("gen"), int(m.group("idx"))), start
        else:
            yield "const", m.group("const"), start
        pos = m.end()
    yield "end", None, len(text)


def _factor(n: int, name: str, idx: int, pos: int) -> Element:
    try:
        if name == "y":
            return Element.y(n, idx)
        if name == "x":
            return Element.x(n, idx)
        if name == "xp":
            return Element.xp(n, idx)
        if name == "c":
            return chern(n, idx)
        if name in ("e", "ep"):
            if idx % 2 == 0:
                raise ValueError(f"exterior class degree {idx} is even")
            return quillen_e(n, (idx + 1) // 2, Variant.PRIMED if name == "ep" else Variant.PLAIN)
        if name in ("b", "d", "dp"):
            if n != 2:
                raise ValueError("b/d classes are defined in A_2 only")
            key = f"{'b' if name == 'b' else 'd'}{idx}{'p' if name == 'dp' else ''}"
            return limit_class(key)
    except (ValueError, KeyError) as err:
        raise ParseError(str(err).strip("'\""), pos) from None
    raise ParseError(f"unknown generator {name!r}", pos)  # pragma: no cover


def parse(text: str, n: int) -> Element:
    """Parse ``text`` into an element of A_n."""
    toks = list(_tokens(text))
    i = 0
    total = Element.zero(n)
    while True:
        term = Element.one(n)
        while True:
            kind, val, pos = toks[i]
            if kind == "gen":
                name, idx = val
                i += 1
                f = _factor(n, name, idx, pos)
                if name == "y" and toks[i][:2] == ("op", "^"):
                    kind2, exp, pos2 = toks[i + 1]
                    if kind2 != "const":
                        raise ParseError("expected exponent", pos2)
                    f = f ** int(exp)
                    i += 2
                term = term * f
            elif kind == "const" and val in ("0", "1"):
                i += 1
                if val == "0":
                    term = Element.zero(n)
            else:
                raise ParseError("expected a factor", pos)
            if toks[i][:2] == ("op", "*"):
                i += 1
                continue
            break
        total = total + term
        kind, val, pos = toks[i]
        if kind == "end":
            return total
        if (kind, val) == ("op", "+"):
            i += 1
            continue
        raise ParseError(f"unexpected {val!r}", pos)


def format_element(e: Element) -> str:
    return str(e)

"""Parsers for family description strings and the braid text format.

    TB(i,j,r)@n            torus braid B_{i,j}^r on n strands
    TL[(r1,s1),(r2,s2)]    T-link
    TTK(p,q;r,s)           twisted torus knot
    FB@p[(i,j,r),...]      factored braid
    n=3: 1 2 -1            raw braid word

In factored braids a window starting at 0 is read as starting at 1, so the
full-width factor may be written either B_{0,p} or B_{1,p}.
"""

from __future__ import annotations

from typing import Union

from .braid import BraidWord, parse_braid
from .errors import InvalidSpecError, ParseError
from .families import FactoredBraid, TLinkSpec, TorusBraidFactor, TwistedTorusSpec

Parsed = Union[BraidWord, FactoredBraid, TLinkSpec, TwistedTorusSpec]


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise ParseError(f"expected {token!r}", self.text, self.pos)
        self.pos += len(token)

    def peek(self, token: str) -> bool:
        self.skip_ws()
        return self.text.startswith(token, self.pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected an integer", self.text, start)
        return int(self.text[start:self.pos])

    def tuple_of(self, count: int, seps: tuple[str, ...] = ()) -> tuple[int, ...]:
        self.expect("(")
        vals = [self.integer()]
        for k in range(count - 1):
            self.expect(seps[k] if seps else ",")
            vals.append(self.integer())
        self.expect(")")
        return tuple(vals)

    def tuple_list(self, count: int) -> list[tuple[int, ...]]:
        self.expect("[")
        items = []
        if not self.peek("]"):
            items.append(self.tuple_of(count))
            while self.peek(","):
                self.expect(",")
                items.append(self.tuple_of(count))
        self.expect("]")
        return items

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing input", self.text, self.pos)


def _wrap(fn, text: str, pos: int):
    try:
        return fn()
    except InvalidSpecError as exc:
        raise ParseError(str(exc), text, pos) from exc


def parse_spec(text: str) -> Parsed:
    s = text.strip()
    if s.startswith("n="):
        return parse_braid(s)
    cur = _Cursor(s)
    if s.startswith("TTK"):
        cur.expect("TTK")
        p, q, r, sv = cur.tuple_of(4, (",", ";", ","))
        cur.end()
        return _wrap(lambda: TwistedTorusSpec(p, q, r, sv), s, 0)
    if s.startswith("TB"):
        cur.expect("TB")
        i, j, r = cur.tuple_of(3)
        cur.expect("@")
        n = cur.integer()
        cur.end()
        return _wrap(lambda: FactoredBraid(n, (TorusBraidFactor(i, j, r),) if r else ()), s, 0)
    if s.startswith("TL"):
        cur.expect("TL")
        pairs = cur.tuple_list(2)
        cur.end()
        return _wrap(lambda: TLinkSpec(tuple(pairs)), s, 0)
    if s.startswith("FB"):
        cur.expect("FB")
        cur.expect("@")
        p = cur.integer()
        triples = cur.tuple_list(3)
        cur.end()
        norm = [(1 if i == 0 else i, j, r) for i, j, r in triples]
        return _wrap(lambda: FactoredBraid(p, tuple(norm)), s, 0)
    raise ParseError("unknown spec; expected TB(...)@n, TL[...], TTK(...), FB@p[...] or n=...:", s, 0)


def format_spec(obj: Parsed) -> str:
    if isinstance(obj, BraidWord):
        from .braid import format_braid

        return format_braid(obj)
    return str(obj)

"""Plain-text polytope files.

Layout, whitespace-separated with ``#`` comments ignored to end of line::

    n m V
    A
    <m rows of n rationals>
    b
    <m rationals>
    vertices
    <V rows of n rationals>

Rationals are an optionally signed integer, or ``p/q`` with unsigned
positive ``q``.  Output is deterministic: same section order, one row per
line, rationals in lowest terms.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .core import Polytope, ValidationError

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")
_INTEGER = re.compile(r"[+-]?\d+\Z")


class _Tokens:
    def __init__(self, text: str) -> None:
        self.items: list[tuple[int, str]] = []
        for line_no, line in enumerate(text.splitlines(), start=1):
            body = line.split("#", 1)[0]
            for tok in body.split():
                self.items.append((line_no, tok))
        self.pos = 0

    def next(self, what: str) -> tuple[int, str]:
        if self.pos >= len(self.items):
            raise ValidationError(f"unexpected end of input: expected {what}")
        item = self.items[self.pos]
        self.pos += 1
        return item

    def exhausted(self) -> bool:
        return self.pos >= len(self.items)


def _integer(tokens: _Tokens, what: str) -> int:
    line, tok = tokens.next(what)
    if not _INTEGER.match(tok):
        raise ValidationError(f"line {line}: expected integer for {what}, got {tok!r}")
    return int(tok)


def _literal(tokens: _Tokens, word: str) -> None:
    line, tok = tokens.next(f"section marker {word!r}")
    if tok != word:
        raise ValidationError(f"line {line}: expected section marker {word!r}, got {tok!r}")


def _rational(tokens: _Tokens, what: str) -> Fraction:
    line, tok = tokens.next(what)
    if not _RATIONAL.match(tok):
        raise ValidationError(f"line {line}: malformed rational for {what}: {tok!r}")
    if "/" in tok:
        num, den = tok.split("/")
        if int(den) == 0:
            raise ValidationError(f"line {line}: zero denominator for {what}: {tok!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(tok))


def parse_polytope(text: str) -> Polytope:
    """Parse and validate; raises ValidationError with line diagnostics."""
    tokens = _Tokens(text)
    n = _integer(tokens, "coordinate count n")
    m = _integer(tokens, "equality row count m")
    v_count = _integer(tokens, "vertex count V")
    if n < 1:
        raise ValidationError(f"coordinate count must be at least 1, got {n}")
    if m < 0:
        raise ValidationError(f"equality row count must be nonnegative, got {m}")
    if v_count < 1:
        raise ValidationError(f"vertex count must be at least 1, got {v_count}")

    _literal(tokens, "A")
    A = [
        [_rational(tokens, f"A row {j} entry {i}") for i in range(n)]
        for j in range(m)
    ]
    _literal(tokens, "b")
    b = [_rational(tokens, f"b entry {j}") for j in range(m)]
    _literal(tokens, "vertices")
    verts = [
        [_rational(tokens, f"vertex {k} coordinate {i + 1}") for i in range(n)]
        for k in range(v_count)
    ]
    if not tokens.exhausted():
        line, tok = tokens.next("")
        raise ValidationError(f"line {line}: trailing input starting at {tok!r}")
    return Polytope(A, b, verts)


def format_polytope(p: Polytope) -> str:
    """Deterministic text form; parses back to an equal polytope."""
    lines = [f"{p.n} {p.m} {p.vertex_count}", "A"]
    lines += [" ".join(str(x) for x in row) for row in p.A]
    lines.append("b")
    if p.m:
        lines.append(" ".join(str(x) for x in p.b))
    lines.append("vertices")
    lines += [" ".join(str(x) for x in v) for v in p.vertices]
    return "\n".join(lines) + "\n"

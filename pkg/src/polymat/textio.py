"""Plain-text ideal format.

::

    # comment
    ring 4
    x1*x2, x2^2*x3
    x4

A ``ring <n>`` header starts each ideal; generators follow one per line or
comma-separated. Several ideals may be concatenated, each with its own header.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .monomial import Monomial, MonomialIdeal

_HEADER = re.compile(r"\s*ring\s+(\d+)\s*$")
_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def _parse_generator(text: str, n: int, line: int, col: int) -> Monomial:
    exps = [0] * n
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        m = _FACTOR.match(text, pos)
        if m is None:
            raise ParseError(f"expected factor x<i> or x<i>^<e>, got {text[pos:pos + 8]!r}", line, col + pos)
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if not 1 <= i <= n:
            raise ParseError(f"variable x{i} outside ring of dimension {n}", line, col + pos)
        if e < 1:
            raise ParseError("exponent must be >= 1", line, col + pos)
        exps[i - 1] += e
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            return Monomial(exps)
        if text[pos] != "*":
            raise ParseError(f"unexpected character {text[pos]!r}", line, col + pos)
        pos += 1


def parse_ideals(text: str) -> list[MonomialIdeal]:
    """Parse every ``ring``-headed ideal in ``text``."""
    ideals: list[MonomialIdeal] = []
    n: int | None = None
    gens: list[Monomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        header = _HEADER.match(body)
        if header:
            if n is not None:
                ideals.append(MonomialIdeal(n, tuple(gens)))
            n = int(header.group(1))
            if n < 1:
                raise ParseError("ring dimension must be >= 1", lineno, 1)
            gens = []
            continue
        if n is None:
            raise ParseError("missing 'ring <n>' header", lineno, 1)
        col = 1
        for chunk in body.split(","):
            if not chunk.strip():
                raise ParseError("empty generator", lineno, col)
            gens.append(_parse_generator(chunk, n, lineno, col))
            col += len(chunk) + 1
    if n is None:
        raise ParseError("missing 'ring <n>' header", 1, 1)
    ideals.append(MonomialIdeal(n, tuple(gens)))
    return ideals


def parse_ideal(text: str) -> MonomialIdeal:
    ideals = parse_ideals(text)
    if len(ideals) != 1:
        raise ParseError(f"expected one ideal, found {len(ideals)}", 1, 1)
    return ideals[0]


def format_ideal(I: MonomialIdeal) -> str:
    lines = [f"ring {I.n}"]
    if I.generators:
        lines.append(", ".join(str(g) for g in I.generators))
    return "\n".join(lines) + "\n"

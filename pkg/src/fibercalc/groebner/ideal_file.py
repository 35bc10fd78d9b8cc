"""Plain-text ideal files.

    # comment
    vars: x y z t u
    order: grevlex
    point: u            (optional, the coordinate set to 1)
    xz
    x*t - y^2

Header lines come first; every other non-blank line is one generator.
"""
from __future__ import annotations

from dataclasses import dataclass

from .buchberger import IdealBasis
from .polynomial import ORDERS, GREVLEX, ParseError, parse_polynomial


@dataclass
class IdealFile:
    name: str
    basis: IdealBasis
    point: str | None = None
    sources: tuple = ()


def parse_ideal_text(text: str, name: str = "<string>") -> IdealFile:
    vars = None
    order = GREVLEX
    point = None
    gens, sources = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        head = head.strip().lower()
        if sep and head in ("vars", "order", "point"):
            rest = rest.strip()
            if head == "vars":
                vars = tuple(rest.replace(",", " ").split())
                if not vars or len(set(vars)) != len(vars):
                    raise ParseError("bad variable list", line=lineno)
            elif head == "order":
                if rest.lower() not in ORDERS:
                    raise ParseError(f"unknown order {rest!r}", line=lineno)
                order = ORDERS[rest.lower()]
            else:
                point = rest
            continue
        if vars is None:
            raise ParseError("generator before the 'vars:' line", line=lineno)
        try:
            gens.append(parse_polynomial(line.rstrip(","), vars))
        except ParseError as exc:
            raise ParseError(exc.msg, column=exc.column, line=lineno) from None
        sources.append(line.rstrip(","))
    if vars is None:
        raise ParseError("missing 'vars:' line")
    if point is not None and point not in vars:
        raise ParseError(f"point coordinate {point!r} is not a variable")
    return IdealFile(name, IdealBasis(vars, gens, order), point, tuple(sources))


def load_ideal_file(path) -> IdealFile:
    with open(path) as fh:
        return parse_ideal_text(fh.read(), str(path))

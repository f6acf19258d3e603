"""Text forms of elements, faces and points.

Element grammar: ``word := atom+`` with ``atom := "s"<int> | "e(" <int> ("," <int>)* ")" | "e()"``.
Generator labels are 1-based.  For round-tripping printed output the parser
also accepts a bare ``e`` (identity), braces inside ``e(...)`` and the
separators ``|`` and ``·``.
"""

from __future__ import annotations

from fractions import Fraction

from .coxeter import WeylElem, WeylGroup
from .errors import ParseError
from .monoid import MonoidElem, from_parts, multiply_all, unit
from .titscone import DEFAULT_DESCENT_CAP, DEFAULT_FACE_BUDGET, EXACT, ConePoint, Face, make_face

_SEPARATORS = set(" \t\r\n|·")


def _read_int(text: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ParseError("expected a positive integer", start)
    return int(text[start:pos]), pos


def _read_index_list(text: str, pos: int, n: int) -> tuple[frozenset, int]:
    """Parse ``(i,j,...)``, ``()`` or ``({i,...})`` starting at an opening parenthesis."""
    if pos >= len(text) or text[pos] != "(":
        raise ParseError("expected '('", pos)
    pos += 1
    braces = False
    if pos < len(text) and text[pos] == "{":
        braces = True
        pos += 1
    out = []

    def skip_ws(p):
        while p < len(text) and text[p] in " \t":
            p += 1
        return p

    pos = skip_ws(pos)
    closer = "}" if braces else ")"
    if pos < len(text) and text[pos] == closer:
        pos += 1
    else:
        while True:
            pos = skip_ws(pos)
            start = pos
            i, pos = _read_int(text, pos)
            if not 1 <= i <= n:
                raise ParseError(f"index {i} out of range 1..{n}", start)
            out.append(i - 1)
            pos = skip_ws(pos)
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            if pos < len(text) and text[pos] == closer:
                pos += 1
                break
            raise ParseError(f"expected ',' or '{closer}'", pos)
    if braces:
        if pos >= len(text) or text[pos] != ")":
            raise ParseError("expected ')'", pos)
        pos += 1
    return frozenset(out), pos


def parse_atoms(text: str, n: int) -> list[tuple]:
    """Tokenize an element expression into ('s', i) and ('e', subset) atoms."""
    atoms: list[tuple] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch in _SEPARATORS:
            pos += 1
            continue
        if ch == "s":
            start = pos
            i, pos = _read_int(text, pos + 1)
            if not 1 <= i <= n:
                raise ParseError(f"generator s{i} out of range 1..{n}", start)
            atoms.append(("s", i - 1))
            continue
        if ch == "e":
            if pos + 1 < len(text) and text[pos + 1] == "(":
                start = pos
                subset, pos = _read_index_list(text, pos + 1, n)
                atoms.append(("e", subset, start))
            else:
                pos += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", pos)
    return atoms


def parse_word(group: WeylGroup, text: str) -> WeylElem:
    """A pure s-word (or ``e``) as a Weyl group element."""
    w = group.identity
    for atom in parse_atoms(text, group.n):
        if atom[0] != "s":
            raise ParseError("idempotent atom not allowed in a Weyl group word", atom[2])
        w = w.rmul(atom[1])
    return w


def parse_element(
    group: WeylGroup,
    text: str,
    budget: int = DEFAULT_FACE_BUDGET,
    cap: int = DEFAULT_DESCENT_CAP,
) -> tuple[MonoidElem, str]:
    """Evaluate an expression to its canonical monoid element and exactness tag."""
    factors: list[MonoidElem] = []
    run = group.identity
    for atom in parse_atoms(text, group.n):
        if atom[0] == "s":
            run = run.rmul(atom[1])
            continue
        subset, start = atom[1], atom[2]
        if not group.gcm.is_special(subset):
            raise ParseError("idempotent index set is not special", start)
        if not run.is_identity:
            factors.append(unit(run))
        factors.append(from_parts(group.identity, subset, group.identity))
        run = group.identity
    if not factors:
        return unit(run), EXACT
    if not run.is_identity:
        factors.append(unit(run))
    return multiply_all(factors, budget, cap)


def parse_face(group: WeylGroup, text: str) -> Face:
    """Parse ``w · R({i,...})``."""
    idx = text.find("R(")
    if idx < 0:
        raise ParseError("expected 'R(' in face", 0)
    w = parse_word(group, text[:idx])
    theta, pos = _read_index_list(text, idx + 1, group.n)
    if text[pos:].strip():
        raise ParseError("trailing characters after face", pos)
    return make_face(group, theta, w)


def parse_point(text: str, n: int) -> ConePoint:
    """Comma-separated rationals such as ``1,0,-1/2``."""
    parts = [p.strip() for p in text.strip().strip("()").split(",")]
    if len(parts) != n:
        raise ParseError(f"expected {n} coordinates, got {len(parts)}", 0)
    vals = []
    offset = 0
    for p in parts:
        try:
            vals.append(Fraction(p))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {p!r}", offset) from None
        offset += len(p) + 1
    return ConePoint(tuple(vals))

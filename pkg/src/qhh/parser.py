"""Reader and writer for the line-oriented algebra description format.

::

    # preprojective algebra of type D4
    field gf 2
    vertex 1 2 3 4
    arrow a 1 4
    arrow b 4 1
    rel a b
    rel b a + d g + e x

``rel`` takes signed terms; a term is an optional integer (or ``p/q``)
coefficient followed by arrow ids composed left to right.  In standalone
expressions (not relations) ``@v`` denotes the trivial path at vertex ``v``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .field import GF, QQ, FieldError, parse_field
from .free import FreeElement
from .quiver import CompositionError, Quiver, QuiverError

_COEFF = re.compile(r"^-?\d+(/\d+)?$")


class ParseError(ValueError):
    """Syntax error at a known location (1-based line and column)."""

    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        loc = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(loc + message)


class SemanticError(ValueError):
    pass


@dataclass
class Presentation:
    quiver: Quiver
    relations: list
    field: object = dc_field(default_factory=lambda: GF(2))
    name: str = ""
    relation_texts: list = dc_field(default_factory=list, compare=False)

    def with_field(self, field):
        """Same quiver and relations, coefficients reread from source in ``field``."""
        texts = self.relation_texts or [r.format(self.quiver) for r in self.relations]
        rels = [parse_element(t, self.quiver, field, admissible=True) for t in texts]
        return Presentation(self.quiver, rels, field, self.name, list(texts))

    def __eq__(self, other):
        return (isinstance(other, Presentation) and self.quiver == other.quiver
                and self.field == other.field and self.relations == other.relations)


def _tokens(line):
    for m in re.finditer(r"\S+", line):
        yield m.group(0), m.start() + 1


def parse_element(text, quiver, field, *, lineno=None, offset=0, admissible=False):
    """Parse ``"b a + d g - 2 e x"`` into a :class:`FreeElement`."""
    toks = list(_tokens(text))
    terms = []
    sign = 1
    coeff = None
    word = []
    expect_term = True

    def flush(col):
        nonlocal coeff, word, sign
        if not word:
            raise ParseError("term without arrows", lineno, col + offset)
        try:
            if word[0].startswith("@"):
                if len(word) != 1:
                    raise ParseError("a trivial path stands alone", lineno, col + offset)
                path = quiver.trivial(word[0][1:])
            else:
                path = quiver.path(word)
        except CompositionError as exc:
            raise SemanticError(f"non-composable term {' '.join(word)!r}: {exc}") from None
        except QuiverError as exc:
            raise SemanticError(str(exc)) from None
        c = Fraction(coeff) if coeff is not None else Fraction(1)
        terms.append((path, field(sign * c)))
        coeff, word, sign = None, [], 1

    last_col = 1
    after_sign = False
    for tok, col in toks:
        last_col = col
        if tok in ("+", "-"):
            if word:
                flush(col)
            elif not expect_term or coeff is not None or after_sign:
                raise ParseError(f"unexpected {tok!r}", lineno, col + offset)
            sign = -1 if tok == "-" else 1
            expect_term = after_sign = True
            continue
        if _COEFF.match(tok):
            if word or coeff is not None:
                raise ParseError(f"misplaced coefficient {tok!r}", lineno, col + offset)
            coeff = tok
            continue
        if not re.fullmatch(r"@?[A-Za-z0-9_][A-Za-z0-9_']*", tok):
            raise ParseError(f"bad token {tok!r}", lineno, col + offset)
        word.append(tok)
        expect_term = after_sign = False
    if not toks:
        raise ParseError("empty expression", lineno, offset + 1)
    flush(last_col)
    el = FreeElement(field, terms)
    if admissible:
        if el.is_zero():
            raise SemanticError(f"relation {text.strip()!r} is zero")
        if not el.is_uniform():
            raise SemanticError(f"relation {text.strip()!r} is not uniform")
        if any(p.length < 2 for p in el.paths()):
            raise SemanticError(f"relation {text.strip()!r} has a term of length < 2")
    return el


def parse_algebra(text, name="", field=None):
    """Parse an algebra description; returns a :class:`Presentation`.

    ``field`` overrides the file's ``field`` line.
    """
    override = field
    field = None
    vertices = []
    arrows = []
    rel_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        head, col = toks[0]
        args = toks[1:]
        if head == "field":
            value = "".join(t for t, _ in args)
            if not value:
                raise ParseError("field needs a value", lineno, col)
            try:
                field = parse_field(value)
            except FieldError as exc:
                raise ParseError(str(exc), lineno, args[0][1]) from None
        elif head == "vertex":
            if not args:
                raise ParseError("vertex needs at least one id", lineno, col)
            vertices.extend(t for t, _ in args)
        elif head == "arrow":
            if len(args) != 3:
                raise ParseError("expected: arrow <id> <from> <to>", lineno, col)
            arrows.append(tuple(t for t, _ in args))
        elif head == "rel":
            if not args:
                raise ParseError("empty relation", lineno, col)
            rel_lines.append((lineno, line, args[0][1]))
        elif head == "name":
            name = " ".join(t for t, _ in args)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, col)
    field = override or field or GF(2)
    try:
        quiver = Quiver(vertices, arrows)
    except QuiverError as exc:
        raise SemanticError(str(exc)) from None
    relations = []
    texts = []
    for lineno, line, start in rel_lines:
        body = line[start - 1:]
        relations.append(parse_element(body, quiver, field, lineno=lineno,
                                       offset=start - 1, admissible=True))
        texts.append(" ".join(body.split()))
    return Presentation(quiver, relations, field, name, texts)


def format_algebra(pres: Presentation) -> str:
    """Inverse of :func:`parse_algebra` up to comments and whitespace."""
    q = pres.quiver
    lines = []
    if pres.name:
        lines.append(f"name {pres.name}")
    f = pres.field
    lines.append("field q" if f == QQ else f"field gf {f.p}")
    lines.append("vertex " + " ".join(q.vertices))
    for a, o, t in q.arrows:
        lines.append(f"arrow {a} {o} {t}")
    texts = pres.relation_texts or [r.format(q) for r in pres.relations]
    for t in texts:
        lines.append("rel " + t)
    return "\n".join(lines) + "\n"

"""Plain-text presentations of superalgebras, and their parser.

The format mirrors relation lists one-to-one::

    algebra "(4|0)_2"
    even: e1 e2 e3 e4
    odd:
    [e1, e2] = e3
    [e1, e3] = e4

Right-hand sides are formal sums like ``2 e2`` or ``-1 e1 + 1/3 e2``; blank
lines and lines starting with ``#`` are ignored.  Undeclared brackets are
zero and the mirror orientation of each declared bracket is filled in by
super skew symmetry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .build import StructureConflictError, algebra_from_relations
from .core import LieSuperalgebra, ValidationReport, validate


class AlgebraFormatError(ValueError):
    """Base class for everything wrong with an algebra file."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where = f" ({where})"
        super().__init__(f"{message}{where}")


class FormatSyntaxError(AlgebraFormatError):
    pass


class UnknownBasisNameError(AlgebraFormatError):
    pass


class DuplicateRelationError(AlgebraFormatError):
    pass


class ConflictingRelationError(AlgebraFormatError):
    pass


class BadRationalError(AlgebraFormatError):
    pass


class ValidationFailedError(ValueError):
    """The file parsed, but the algebra it defines breaks a bracket law."""

    def __init__(self, report: ValidationReport):
        self.report = report
        first = report.violations[0].detail if report.violations else "unknown violation"
        super().__init__(f"algebra fails validation: {first}")


@dataclass(frozen=True)
class AlgebraFile:
    """The parsed file, before any algebra is built from it."""

    name: str
    even_names: tuple[str, ...]
    odd_names: tuple[str, ...]
    relations: tuple[tuple[str, str, tuple[tuple[Fraction, str], ...], int], ...]


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_HEADER_RE = re.compile(r'^algebra\s+"([^"]*)"\s*$')
_RELATION_RE = re.compile(r"^\[\s*(\w+)\s*,\s*(\w+)\s*\]\s*=\s*(.*\S)\s*$")
_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|\d+(?:\.\d+)?(?:/\d+)?|\+|-|\S")


def _parse_sum(rhs: str, lineno: int, offset: int) -> tuple[tuple[Fraction, str], ...]:
    if rhs.strip() == "0":
        return ()
    terms: list[tuple[Fraction, str]] = []
    sign = Fraction(1)
    coeff: Fraction | None = None
    expect_name = False
    for tok in _TOKEN_RE.finditer(rhs):
        text = tok.group(0)
        col = offset + tok.start() + 1
        if text in "+-":
            if expect_name or coeff is not None:
                raise FormatSyntaxError("dangling sign inside a term", lineno, col)
            if terms and text == "+":
                sign = Fraction(1)
            elif text == "-":
                sign = -sign
            elif not terms:
                raise FormatSyntaxError("a sum cannot start with +", lineno, col)
            expect_name = True
            continue
        if text[0].isdigit():
            if coeff is not None:
                raise FormatSyntaxError("two coefficients in a row", lineno, col)
            if "." in text:
                raise BadRationalError(f"{text!r} is not a rational", lineno, col)
            try:
                coeff = Fraction(text)
            except ZeroDivisionError:
                raise BadRationalError(f"{text!r} has a zero denominator", lineno, col) from None
            continue
        if _NAME_RE.fullmatch(text):
            terms.append(((coeff if coeff is not None else Fraction(1)) * sign, text))
            sign = Fraction(1)
            coeff = None
            expect_name = False
            continue
        raise FormatSyntaxError(f"unexpected {text!r}", lineno, col)
    if coeff is not None or expect_name:
        raise FormatSyntaxError("term is missing its basis name", lineno, offset + len(rhs))
    if not terms:
        raise FormatSyntaxError("empty right-hand side", lineno, offset + 1)
    return tuple(terms)


def parse_file(text: str) -> AlgebraFile:
    """Parse the textual structure without building or checking the algebra."""
    lines = [
        (i + 1, ln)
        for i, raw in enumerate(text.splitlines())
        for ln in [raw.strip()]
        if ln and not ln.startswith("#")
    ]
    if not lines:
        raise FormatSyntaxError("empty file", 1, 1)

    pos = 0

    def take(what: str) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise FormatSyntaxError(f"missing {what} line", lines[-1][0] + 1, 1)
        item = lines[pos]
        pos += 1
        return item

    lineno, header = take("algebra")
    m = _HEADER_RE.match(header)
    if not m:
        raise FormatSyntaxError('expected: algebra "<name>"', lineno, 1)
    name = m.group(1)

    declared: list[str] = []
    parts = []
    for label in ("even", "odd"):
        lineno, line = take(f"{label}:")
        if not line.startswith(f"{label}:"):
            raise FormatSyntaxError(f"expected a {label}: line", lineno, 1)
        names = line[len(label) + 1 :].split()
        for nm in names:
            if not _NAME_RE.fullmatch(nm):
                raise FormatSyntaxError(f"bad basis name {nm!r}", lineno, line.index(nm) + 1)
            if nm in declared:
                raise FormatSyntaxError(f"basis name {nm!r} declared twice", lineno, 1)
            declared.append(nm)
        parts.append(tuple(names))
    even_names, odd_names = parts

    known = set(declared)
    relations = []
    seen: set[tuple[str, str]] = set()
    while pos < len(lines):
        lineno, line = take("relation")
        m = _RELATION_RE.match(line)
        if not m:
            raise FormatSyntaxError("expected: [a, b] = sum", lineno, 1)
        left, right = m.group(1), m.group(2)
        for nm, grp in ((left, 1), (right, 2)):
            if nm not in known:
                raise UnknownBasisNameError(f"unknown basis name {nm!r}", lineno, m.start(grp) + 1)
        if (left, right) in seen:
            raise DuplicateRelationError(f"[{left}, {right}] declared twice", lineno, 1)
        seen.add((left, right))
        terms = _parse_sum(m.group(3), lineno, m.start(3))
        for _, nm in terms:
            if nm not in known:
                raise UnknownBasisNameError(f"unknown basis name {nm!r}", lineno, 1)
        relations.append((left, right, terms, lineno))
    return AlgebraFile(name, even_names, odd_names, tuple(relations))


def build_algebra(af: AlgebraFile) -> LieSuperalgebra:
    """Turn a parsed file into an algebra, filling mirrors by skew symmetry."""
    names = af.even_names + af.odd_names
    index = {nm: i for i, nm in enumerate(names)}
    r = len(af.even_names)

    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    first_line: dict[tuple[int, int], int] = {}
    for left, right, terms, lineno in af.relations:
        i, j = index[left], index[right]
        value: dict[int, Fraction] = {}
        for c, nm in terms:
            value[index[nm]] = value.get(index[nm], Fraction(0)) + c
        value = {k: c for k, c in value.items() if c}
        sign = -1 if (i >= r and j >= r) else 1
        mirror = {k: -sign * c for k, c in value.items()}
        if i == j and value != mirror:
            raise ConflictingRelationError(
                f"[{left}, {left}] must vanish for an even basis vector", lineno)
        for key, val in ((i, j), value), ((j, i), mirror):
            if key in table:
                if table[key] != val:
                    raise ConflictingRelationError(
                        f"[{names[key[0]]}, {names[key[1]]}] conflicts with the "
                        f"relation on line {first_line[key]} (super skew symmetry)",
                        lineno)
            else:
                table[key] = val
                first_line[key] = lineno

    rels = [(i, j, val) for (i, j), val in table.items()]
    try:
        return algebra_from_relations(af.name, af.even_names, af.odd_names, rels)
    except StructureConflictError as exc:  # defensive; conflicts are caught above
        raise ConflictingRelationError(str(exc)) from None


def parse(text: str, *, check: bool = True) -> LieSuperalgebra:
    """Parse, build, and (by default) validate an algebra file.

    Raises ValidationFailedError when the algebra breaks a bracket law.
    """
    alg = build_algebra(parse_file(text))
    if check:
        report = validate(alg)
        if not report.ok:
            raise ValidationFailedError(report)
    return alg


def _format_sum(terms: list[tuple[Fraction, str]]) -> str:
    parts = []
    for c, nm in terms:
        parts.append(nm if c == 1 else f"{c} {nm}")
    return " + ".join(parts)


def export(alg: LieSuperalgebra) -> str:
    """Serialize an algebra; one canonical orientation i <= j per bracket."""
    out = [f'algebra "{alg.name}"']
    out.append(("even: " + " ".join(alg.even_names)).rstrip())
    out.append(("odd: " + " ".join(alg.odd_names)).rstrip())
    names = alg.basis_names
    for i in range(alg.n):
        for j in range(i, alg.n):
            support = alg.basis_bracket(i, j)
            if support:
                terms = [(c, names[k]) for k, c in support]
                out.append(f"[{names[i]}, {names[j]}] = {_format_sum(terms)}")
    return "\n".join(out) + "\n"

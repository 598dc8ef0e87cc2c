"""Readers and writers for group-spec files and polynomial files.

Spec file layout (``#`` starts a comment)::

    dim: 4
    theta: 1.0
    signature: [1, 1, 1, -1]
    circle_blocks: [1, 2]
    finite_generators:
    involutions:
      [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, cosh, sinh], [0, 0, -sinh, -cosh]]
      [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -cosh, -sinh], [0, 0, sinh, cosh]]

A section runs from its ``name:`` header (at column 0) to the next header.
Coordinates are numbered from 1 (x1..xn).  Matrix entries are rationals
(``3``, ``-1/2``, ``0.25``) or, in involutions only, one of the tokens
``cosh``, ``-cosh``, ``sinh``, ``-sinh``, evaluated at ``theta``.

Polynomial file layout::

    poly x1^2 + x2^2
      1 [2, 0, 0, 0]
      1 [0, 2, 0, 0]

Each term line is a coefficient expression followed by an exponent vector.
Coefficients may use ``cosh``, ``sinh``, ``+ - * / ^`` and parentheses.
"""

from __future__ import annotations

import ast
import math
import operator
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .algebra import Mat, Polynomial
from .errors import ParseError, SpecError
from .group_model import GroupSpec

HYPERBOLIC_TOKENS = ("cosh", "-cosh", "sinh", "-sinh")
SECTIONS = ("dim", "theta", "signature", "circle_blocks", "finite_generators", "involutions")

Entry = Union[Fraction, str]

_HEADER = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*:(.*)$")
_TOKEN = re.compile(r"\s*(?:(\[)|(\])|(,)|([^\s\[\],]+))")


# -- bracketed-list reader ----------------------------------------------------


@dataclass
class _Atom:
    text: str
    line: int


@dataclass
class _List:
    items: list
    line: int


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


def _tokenize(chunks: List[Tuple[int, str]]):
    for lineno, text in chunks:
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos:pos + 1]!r}", lineno)
            pos = m.end()
            if m.group(1):
                yield "[", None, lineno
            elif m.group(2):
                yield "]", None, lineno
            elif m.group(3):
                yield ",", None, lineno
            elif m.group(4):
                yield "atom", m.group(4), lineno


def _read_values(chunks: List[Tuple[int, str]]) -> list:
    """Parse whitespace/comma separated values, where a value is an atom or a bracketed list."""
    tokens = list(_tokenize(chunks))
    pos = 0

    def value():
        nonlocal pos
        kind, text, line = tokens[pos]
        if kind == "atom":
            pos += 1
            return _Atom(text, line)
        if kind != "[":
            raise ParseError(f"unexpected {kind!r}", line)
        pos += 1
        items = []
        while True:
            if pos >= len(tokens):
                raise ParseError("unclosed '['", line)
            kind2, _, line2 = tokens[pos]
            if kind2 == "]":
                pos += 1
                return _List(items, line)
            items.append(value())
            if pos >= len(tokens):
                raise ParseError("unclosed '['", line)
            kind3, _, line3 = tokens[pos]
            if kind3 == ",":
                pos += 1
            elif kind3 != "]":
                raise ParseError("expected ',' or ']'", line3)

    values = []
    while pos < len(tokens):
        if tokens[pos][0] == ",":
            pos += 1
            continue
        if tokens[pos][0] == "]":
            raise ParseError("unbalanced ']'", tokens[pos][2])
        values.append(value())
    return values


def _split_sections(text: str) -> Dict[str, Tuple[int, List[Tuple[int, str]]]]:
    sections: Dict[str, Tuple[int, List[Tuple[int, str]]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        m = _HEADER.match(line) if not line[0].isspace() else None
        if m:
            name = m.group(1)
            if name not in SECTIONS:
                raise ParseError(f"unknown section {name!r}", lineno)
            if name in sections:
                raise ParseError(f"duplicate section {name!r}", lineno)
            sections[name] = (lineno, [(lineno, m.group(2))])
            current = name
        elif current is None:
            raise ParseError("content before the first section header", lineno)
        else:
            sections[current][1].append((lineno, line))
    return sections


# -- entry conversion --------------------------------------------------------


def _rational(atom: _Atom) -> Fraction:
    try:
        return Fraction(atom.text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{atom.text!r} is not a rational literal", atom.line) from None


def _integer(atom: _Atom, what: str) -> int:
    try:
        return int(atom.text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {atom.text!r}", atom.line) from None


def _entry(atom, allow_tokens: bool) -> Entry:
    if not isinstance(atom, _Atom):
        raise ParseError("matrix entries must be scalars", atom.line)
    if atom.text in HYPERBOLIC_TOKENS:
        if not allow_tokens:
            raise ParseError(f"token {atom.text!r} is only allowed in involutions", atom.line)
        return atom.text
    return _rational(atom)


def _is_list_of_lists(value) -> bool:
    return isinstance(value, _List) and value.items and all(isinstance(v, _List) for v in value.items)


def _matrices(values: list, allow_tokens: bool, what: str) -> Tuple[List[List[List[Entry]]], List[int]]:
    # a bracketed list of matrices is accepted as well as a sequence of matrices
    if len(values) == 1 and _is_list_of_lists(values[0]) and all(
        _is_list_of_lists(v) for v in values[0].items
    ):
        values = values[0].items
    mats, lines = [], []
    for v in values:
        if not _is_list_of_lists(v):
            raise ParseError(f"each {what} must be a bracketed list of rows", v.line)
        n = len(v.items)
        rows = []
        for row in v.items:
            if len(row.items) != n:
                raise ParseError(f"{what} is not square: row of length {len(row.items)} in a {n}-row matrix", row.line)
            rows.append([_entry(a, allow_tokens) for a in row.items])
        mats.append(rows)
        lines.append(v.line)
    return mats, lines


def resolve_entry(entry: Entry, theta: Optional[float]):
    if isinstance(entry, Fraction):
        return entry
    if theta is None:
        raise ParseError(f"entry {entry!r} needs a theta value")
    sign = -1.0 if entry.startswith("-") else 1.0
    fn = math.cosh if entry.endswith("cosh") else math.sinh
    return sign * fn(theta)


def _format_entry(entry: Entry) -> str:
    return entry if isinstance(entry, str) else str(entry)


def _format_matrix(rows) -> str:
    return "[" + ", ".join("[" + ", ".join(_format_entry(x) for x in row) + "]" for row in rows) + "]"


# -- spec files --------------------------------------------------------------


@dataclass
class SpecFile:
    """Parsed spec file; hyperbolic tokens are kept symbolic until resolution."""

    dim: int
    circle_blocks: List[Tuple[int, int]] = field(default_factory=list)
    finite_generators: List[List[List[Entry]]] = field(default_factory=list)
    involutions: List[List[List[Entry]]] = field(default_factory=list)
    theta: Optional[float] = None
    signature: Optional[List[int]] = None
    lines: Dict[Tuple[str, int], int] = field(default_factory=dict, compare=False, repr=False)

    def uses_theta(self) -> bool:
        return any(isinstance(x, str) for m in self.involutions for row in m for x in row)

    def to_group_spec(self, theta: Optional[float] = None) -> GroupSpec:
        """Instantiate the spec, with ``theta`` overriding the file's value."""
        theta = self.theta if theta is None else theta
        if self.uses_theta() and theta is None:
            raise ParseError("involutions use cosh/sinh tokens but no theta is given")
        finite = [Mat.of(m) for m in self.finite_generators]
        invs = [Mat.of([[resolve_entry(x, theta) for x in row] for row in m]) for m in self.involutions]
        blocks = [(i - 1, j - 1) for i, j in self.circle_blocks]
        try:
            return GroupSpec(
                dim=self.dim,
                circle_blocks=blocks,
                finite_factor=finite,
                involutions=invs,
                theta=theta,
                signature=self.signature,
            )
        except SpecError as exc:
            raise SpecError(self._anchor(str(exc))) from None

    def _anchor(self, message: str) -> str:
        m = re.match(r"(involution|finite generator)s? (\d+)", message)
        if m:
            kind = "involutions" if m.group(1) == "involution" else "finite_generators"
            line = self.lines.get((kind, int(m.group(2)) - 1))
            if line is not None:
                return f"line {line}: {message}"
        return message

    def dumps(self) -> str:
        out = [f"dim: {self.dim}"]
        if self.theta is not None:
            out.append(f"theta: {self.theta!r}")
        if self.signature is not None:
            out.append("signature: [" + ", ".join(str(s) for s in self.signature) + "]")
        out.append("circle_blocks:" + "".join(f" [{i}, {j}]" for i, j in self.circle_blocks))
        out.append("finite_generators:")
        out.extend("  " + _format_matrix(m) for m in self.finite_generators)
        out.append("involutions:")
        out.extend("  " + _format_matrix(m) for m in self.involutions)
        return "\n".join(out) + "\n"


def parse_spec(text: str) -> SpecFile:
    sections = _split_sections(text)
    if "dim" not in sections:
        raise ParseError("missing required section 'dim'")
    parsed = {}
    for name, (header_line, chunks) in sections.items():
        parsed[name] = (header_line, _read_values(chunks))

    line, values = parsed["dim"]
    if len(values) != 1 or not isinstance(values[0], _Atom):
        raise ParseError("dim takes a single integer", line)
    dim = _integer(values[0], "dim")
    if dim < 1:
        raise ParseError("dim must be positive", line)

    theta = None
    if "theta" in parsed:
        line, values = parsed["theta"]
        if len(values) != 1 or not isinstance(values[0], _Atom):
            raise ParseError("theta takes a single number", line)
        try:
            theta = float(values[0].text)
        except ValueError:
            raise ParseError(f"theta must be a number, got {values[0].text!r}", line) from None

    signature = None
    if "signature" in parsed:
        line, values = parsed["signature"]
        if len(values) != 1 or not isinstance(values[0], _List):
            raise ParseError("signature takes one bracketed list", line)
        signature = [_integer(a, "signature entry") for a in values[0].items]
        if any(s not in (1, -1) for s in signature):
            raise ParseError("signature entries must be 1 or -1", line)
        if len(signature) != dim:
            raise ParseError(f"signature has {len(signature)} entries, dim is {dim}", line)

    blocks: List[Tuple[int, int]] = []
    if "circle_blocks" in parsed:
        line, values = parsed["circle_blocks"]
        if len(values) == 1 and _is_list_of_lists(values[0]):
            values = values[0].items
        for v in values:
            if not isinstance(v, _List) or len(v.items) != 2:
                raise ParseError("each circle block is a pair [i, j]", v.line)
            i, j = (_integer(a, "circle block index") for a in v.items)
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ParseError(f"circle block [{i}, {j}] is out of range 1..{dim}", v.line)
            blocks.append((i, j))

    spec = SpecFile(dim=dim, circle_blocks=blocks, theta=theta, signature=signature)
    for name, allow in (("finite_generators", False), ("involutions", True)):
        if name in parsed:
            _, values = parsed[name]
            mats, lines = _matrices(values, allow, name.rstrip("s").replace("_", " "))
            for k, (m, ln) in enumerate(zip(mats, lines)):
                if len(m) != dim:
                    raise ParseError(f"{name} entry {k + 1} is {len(m)}x{len(m)}, dim is {dim}", ln)
                spec.lines[(name, k)] = ln
            setattr(spec, name, mats)
    return spec


def load_spec(path) -> SpecFile:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())


# -- polynomial files --------------------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}


def evaluate_coefficient(expr: str, theta: Optional[float], line: Optional[int] = None):
    """Evaluate an arithmetic coefficient expression in ``cosh``/``sinh`` of theta.

    Integer literals stay exact; any use of cosh/sinh or a decimal makes the
    result a float.
    """
    try:
        tree = ast.parse(expr.replace("^", "**"), mode="eval")
    except SyntaxError:
        raise ParseError(f"cannot parse coefficient {expr!r}", line) from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
            return Fraction(node.value) if isinstance(node.value, int) else node.value
        if isinstance(node, ast.Name) and node.id in ("cosh", "sinh"):
            if theta is None:
                raise ParseError(f"coefficient {expr!r} needs a theta value", line)
            return getattr(math, node.id)(theta)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Pow):
                if not (isinstance(right, Fraction) and right.denominator == 1 and right >= 0):
                    raise ParseError("exponents must be non-negative integers", line)
                right = int(right)
            return _BINOPS[type(node.op)](left, right)
        raise ParseError(f"unsupported syntax in coefficient {expr!r}", line)

    try:
        return ev(tree)
    except ZeroDivisionError:
        raise ParseError(f"division by zero in coefficient {expr!r}", line) from None


@dataclass
class PolyEntry:
    name: str
    terms: List[Tuple[str, Tuple[int, ...]]]
    line: int

    def polynomial(self, theta: Optional[float]) -> Polynomial:
        return _build_polynomial(self, theta)


def _build_polynomial(entry: PolyEntry, theta: Optional[float]) -> Polynomial:
    nvars = len(entry.terms[0][1]) if entry.terms else 0
    terms: Dict[Tuple[int, ...], object] = {}
    for coeff, exp in entry.terms:
        value = evaluate_coefficient(coeff, theta, entry.line)
        terms[exp] = terms[exp] + value if exp in terms else value
    return Polynomial(nvars, terms)


_TERM = re.compile(r"^(.*?)\s*\[([^\]]*)\]\s*$")


def parse_polys(text: str) -> List[PolyEntry]:
    entries: List[PolyEntry] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line == "poly" or line.startswith("poly ") or line.startswith("poly\t"):
            name = line[4:].strip() or f"poly{len(entries) + 1}"
            entries.append(PolyEntry(name, [], lineno))
            continue
        if not entries:
            raise ParseError("term before the first 'poly' header", lineno)
        m = _TERM.match(line)
        if not m:
            raise ParseError("a term is '<coefficient> [e1, ..., en]'", lineno)
        coeff = m.group(1).strip() or "1"
        try:
            exp = tuple(int(x) for x in m.group(2).split(","))
        except ValueError:
            raise ParseError(f"bad exponent vector [{m.group(2)}]", lineno) from None
        if any(e < 0 for e in exp):
            raise ParseError("exponents must be non-negative", lineno)
        entry = entries[-1]
        if entry.terms and len(entry.terms[0][1]) != len(exp):
            raise ParseError("exponent vectors within a polynomial must have equal length", lineno)
        # surface syntax errors at parse time rather than at evaluation
        evaluate_coefficient(coeff, 1.0, lineno)
        entry.terms.append((coeff, exp))
    return entries


def load_polys(path) -> List[PolyEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_polys(fh.read())

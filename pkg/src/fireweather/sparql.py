"""SPARQL-subset parser and evaluator.

Supported: PREFIX declarations, SELECT with explicit variables, a basic
graph pattern with variables in any position, and numeric/string FILTER
comparisons.  Rows that fail a filter, or whose filtered value cannot be
compared (e.g. a string under a numeric comparison), are silently dropped.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .rdf import Binding, Datatype, Graph, Term, TriplePattern, match_one


class QueryParseError(Exception):
    """Syntax or scoping failure, with line/column context."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class FilterExpr:
    variable: str
    comparator: str  # one of > < >= <= = !=
    operand: Term

    def accepts(self, binding: Binding) -> bool:
        term = binding.get(self.variable)
        if term is None:
            return False
        return _compare(term, self.comparator, self.operand)


@dataclass(frozen=True)
class Query:
    prefixes: dict[str, str]
    select_vars: tuple[str, ...]
    patterns: tuple[TriplePattern, ...]
    filters: tuple[FilterExpr, ...]


@dataclass(frozen=True)
class ResultTable:
    header: tuple[str, ...]
    rows: tuple[tuple[Term, ...], ...]

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(v.lstrip("?") for v in self.header)
        for row in self.rows:
            writer.writerow(_render_cell(t) for t in row)
        return out.getvalue()

    def to_text(self) -> str:
        cells = [[v for v in self.header]] + [[_render_cell(t) for t in row] for row in self.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(self.header))]
        lines = []
        for i, row in enumerate(cells):
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
            if i == 0:
                lines.append("  ".join("-" * w for w in widths))
        return "".join(line + "\n" for line in lines)


def _render_cell(t: Term) -> str:
    return t.value


def _numeric(term: Term) -> Optional[float]:
    if term.datatype in (Datatype.INTEGER, Datatype.DECIMAL):
        return float(term.value)
    return None


def _compare(left: Term, op: str, right: Term) -> bool:
    ln, rn = _numeric(left), _numeric(right)
    if ln is not None and rn is not None:
        a: Union[float, str] = ln
        b: Union[float, str] = rn
    elif left.datatype == Datatype.STRING and right.datatype == Datatype.STRING:
        a, b = left.value, right.value
    else:
        return False  # incomparable kinds eliminate the row
    if op == ">":
        return a > b
    if op == "<":
        return a < b
    if op == ">=":
        return a >= b
    if op == "<=":
        return a <= b
    if op == "=":
        return a == b
    if op == "!=":
        return a != b
    raise ValueError(f"unknown comparator {op!r}")


# --- tokenizer -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
      (?P<WS>\s+)
    | (?P<IRIREF><[^<>\s]*>)
    | (?P<STRING>"(?:[^"\\]|\\.)*")
    | (?P<VAR>\?[A-Za-z_][A-Za-z0-9_]*)
    | (?P<NUMBER>[+-]?\d+(?:\.\d+)?)
    | (?P<PNAME>[A-Za-z_][A-Za-z0-9_-]*:[A-Za-z_][A-Za-z0-9_.-]*|[A-Za-z_][A-Za-z0-9_-]*:)
    | (?P<NAME>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<OP>>=|<=|!=|>|<|=)
    | (?P<PUNCT>[{}().^]|\^\^)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise QueryParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        value = m.group()
        if kind != "WS":
            tokens.append(_Token(kind, value, line, m.start() - line_start + 1))
        else:
            for i, c in enumerate(value):
                if c == "\n":
                    line += 1
                    line_start = m.start() + i + 1
        pos = m.end()
    tokens.append(_Token("EOF", "", line, pos - line_start + 1))
    return tokens


# --- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0
        self.prefixes: dict[str, str] = {}

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def next(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def fail(self, message: str, tok: Optional[_Token] = None):
        tok = tok or self.peek()
        raise QueryParseError(message, tok.line, tok.column)

    def keyword(self, word: str) -> bool:
        tok = self.peek()
        if tok.kind == "NAME" and tok.text.upper() == word:
            self.next()
            return True
        return False

    def expect_keyword(self, word: str):
        if not self.keyword(word):
            self.fail(f"expected {word}")

    def expect_punct(self, ch: str):
        tok = self.peek()
        if tok.kind == "PUNCT" and tok.text == ch:
            self.next()
            return
        self.fail(f"expected {ch!r}, got {tok.text!r}")

    def parse(self) -> Query:
        while self.keyword("PREFIX"):
            tok = self.next()
            if tok.kind != "PNAME" or not tok.text.endswith(":"):
                self.fail("expected prefix name ending in ':'", tok)
            prefix = tok.text[:-1]
            iri_tok = self.next()
            if iri_tok.kind != "IRIREF":
                self.fail("expected <iri> after prefix name", iri_tok)
            self.prefixes[prefix] = iri_tok.text[1:-1]

        self.expect_keyword("SELECT")
        select_vars = []
        while self.peek().kind == "VAR":
            select_vars.append(self.next().text)
        if not select_vars:
            self.fail("SELECT needs at least one variable")

        self.expect_keyword("WHERE")
        self.expect_punct("{")
        patterns: list[TriplePattern] = []
        filters: list[FilterExpr] = []
        while True:
            tok = self.peek()
            if tok.kind == "PUNCT" and tok.text == "}":
                self.next()
                break
            if tok.kind == "NAME" and tok.text.upper() == "FILTER":
                self.next()
                filters.append(self.parse_filter())
                continue
            if tok.kind == "EOF":
                self.fail("unterminated group pattern: missing '}'")
            patterns.append(self.parse_pattern())
            if self.peek().kind == "PUNCT" and self.peek().text == ".":
                self.next()
        tok = self.peek()
        if tok.kind != "EOF":
            self.fail(f"trailing input {tok.text!r}")

        if not patterns:
            missing = select_vars[0]
            self.fail(f"select variable {missing} is not bound by any pattern", self.tokens[0])
        bound = {v for p in patterns for v in p.variables()}
        for v in select_vars:
            if v not in bound:
                self.fail(f"select variable {v} is not bound by any pattern", self.tokens[0])

        return Query(dict(self.prefixes), tuple(select_vars), tuple(patterns), tuple(filters))

    def parse_pattern(self) -> TriplePattern:
        slots = [self.parse_term_or_var() for _ in range(3)]
        return TriplePattern(*slots)

    def parse_term_or_var(self):
        tok = self.next()
        if tok.kind == "VAR":
            return tok.text
        if tok.kind == "IRIREF":
            return Term(tok.text[1:-1])
        if tok.kind == "PNAME":
            return Term(self.expand_pname(tok))
        if tok.kind == "NUMBER":
            return _number_term(tok.text)
        if tok.kind == "STRING":
            return self.parse_literal(tok)
        self.fail(f"expected term or variable, got {tok.text!r}", tok)

    def parse_literal(self, tok: _Token) -> Term:
        lexical = tok.text[1:-1].replace('\\"', '"').replace("\\\\", "\\")
        nxt = self.peek()
        if nxt.kind == "PUNCT" and nxt.text == "^":
            self.next()
            self.expect_punct("^")
            dt_tok = self.next()
            if dt_tok.kind == "IRIREF":
                dt_iri = dt_tok.text[1:-1]
            elif dt_tok.kind == "PNAME":
                dt_iri = self.expand_pname(dt_tok)
            else:
                self.fail("expected datatype after ^^", dt_tok)
            try:
                dt = Datatype(dt_iri)
            except ValueError:
                self.fail(f"unsupported datatype <{dt_iri}>", dt_tok)
            return Term(lexical, dt)
        return Term(lexical, Datatype.STRING)

    def expand_pname(self, tok: _Token) -> str:
        prefix, _, local = tok.text.partition(":")
        if prefix not in self.prefixes:
            self.fail(f"unknown prefix {prefix!r}", tok)
        return self.prefixes[prefix] + local

    def parse_filter(self) -> FilterExpr:
        self.expect_punct("(")
        var_tok = self.next()
        if var_tok.kind != "VAR":
            self.fail("FILTER expects a variable", var_tok)
        op_tok = self.next()
        if op_tok.kind != "OP":
            self.fail(f"expected comparator, got {op_tok.text!r}", op_tok)
        operand_tok = self.next()
        if operand_tok.kind == "NUMBER":
            operand = _number_term(operand_tok.text)
        elif operand_tok.kind == "STRING":
            operand = self.parse_literal(operand_tok)
        else:
            self.fail(f"expected literal operand, got {operand_tok.text!r}", operand_tok)
        self.expect_punct(")")
        return FilterExpr(var_tok.text, op_tok.text, operand)


def _number_term(text: str) -> Term:
    dt = Datatype.DECIMAL if "." in text else Datatype.INTEGER
    return Term(text, dt)


def parse_query(text: str) -> Query:
    return _Parser(text).parse()


# --- evaluation ------------------------------------------------------------


def _substitute(pattern: TriplePattern, binding: Binding) -> TriplePattern:
    def resolve(slot):
        if isinstance(slot, str) and slot in binding:
            return binding[slot]
        return slot

    return TriplePattern(resolve(pattern.subject), resolve(pattern.predicate), resolve(pattern.object))


def _join(g: Graph, patterns: list[TriplePattern], binding: Binding) -> Iterable[Binding]:
    if not patterns:
        yield binding
        return
    # index-nested-loop, picking the remaining pattern with the fewest
    # candidates under the current binding
    sized = []
    for i, p in enumerate(patterns):
        bound = _substitute(p, binding)
        candidates = g.candidates(bound)
        sized.append((len(candidates) if not isinstance(candidates, set) else len(candidates), i, bound, candidates))
    sized.sort(key=lambda x: (x[0], x[1]))
    _, chosen, bound, candidates = sized[0]
    rest = patterns[:chosen] + patterns[chosen + 1 :]
    for t in candidates:
        extended = match_one(bound, t, binding)
        if extended is not None:
            yield from _join(g, rest, extended)


def evaluate(query: Query, g: Graph) -> ResultTable:
    rows = []
    for binding in _join(g, list(query.patterns), {}):
        if all(f.accepts(binding) for f in query.filters):
            rows.append(tuple(binding[v] for v in query.select_vars))
    rows.sort(key=lambda row: tuple(t.sort_key() for t in row))
    return ResultTable(tuple(query.select_vars), tuple(rows))

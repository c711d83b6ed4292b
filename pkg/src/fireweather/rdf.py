"""In-memory RDF triple store with set semantics and positional indexes.

Terms are IRIs or typed literals (string / integer / decimal).  Blank nodes
are deliberately unsupported; ingestion mints deterministic IRIs instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Union

XSD = "http://www.w3.org/2001/XMLSchema#"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"


class Datatype(Enum):
    STRING = XSD + "string"
    INTEGER = XSD + "integer"
    DECIMAL = XSD + "decimal"


class RdfError(Exception):
    """Malformed term, triple, or serialization input."""


@dataclass(frozen=True)
class Term:
    """An IRI or a typed literal.

    ``value`` is the IRI string or the literal's lexical form.  ``datatype``
    is None for IRIs.
    """

    value: str
    datatype: Optional[Datatype] = None

    def __post_init__(self):
        if self.datatype is None:
            if not self.value or any(c.isspace() for c in self.value):
                raise RdfError(f"invalid IRI: {self.value!r}")
        elif self.datatype in (Datatype.INTEGER, Datatype.DECIMAL):
            try:
                float(self.value)
            except ValueError:
                raise RdfError(
                    f"literal {self.value!r} is not a valid {self.datatype.name.lower()}"
                ) from None

    @property
    def is_iri(self) -> bool:
        return self.datatype is None

    @property
    def is_literal(self) -> bool:
        return self.datatype is not None

    def numeric_value(self) -> Optional[float]:
        """The literal's numeric value, or None for IRIs and strings."""
        if self.datatype in (Datatype.INTEGER, Datatype.DECIMAL):
            return float(self.value)
        return None

    def sort_key(self):
        # Numeric literals order by value so binding order is stable across
        # integer/decimal spellings of the same number.
        num = self.numeric_value()
        if num is not None:
            return (1, num, self.value)
        if self.is_literal:
            return (2, 0.0, self.value)
        return (0, 0.0, self.value)

    def __str__(self) -> str:
        if self.is_iri:
            return f"<{self.value}>"
        escaped = self.value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"^^<{self.datatype.value}>'


def iri(value: str) -> Term:
    return Term(value)


def string(value: str) -> Term:
    return Term(value, Datatype.STRING)


def integer(value: Union[int, str]) -> Term:
    return Term(str(value), Datatype.INTEGER)


def decimal(value: Union[float, str]) -> Term:
    if isinstance(value, float):
        value = format_decimal(value)
    return Term(str(value), Datatype.DECIMAL)


def format_decimal(value: float) -> str:
    """Shortest lexical form that round-trips through float()."""
    return repr(float(value))


@dataclass(frozen=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self):
        if not self.subject.is_iri:
            raise RdfError(f"triple subject must be an IRI, got {self.subject}")
        if not self.predicate.is_iri:
            raise RdfError(f"triple predicate must be an IRI, got {self.predicate}")

    def __str__(self) -> str:
        return f"{self.subject} {self.predicate} {self.object} ."


#: A pattern slot: a concrete term or a "?name" variable.
Slot = Union[Term, str]


@dataclass(frozen=True)
class TriplePattern:
    subject: Slot
    predicate: Slot
    object: Slot

    def __post_init__(self):
        for slot in (self.subject, self.predicate, self.object):
            if isinstance(slot, str) and (len(slot) < 2 or not slot.startswith("?")):
                raise RdfError(f"invalid variable name: {slot!r}")

    def variables(self) -> list[str]:
        return [s for s in (self.subject, self.predicate, self.object) if isinstance(s, str)]


Binding = dict[str, Term]


def _matches(slot: Slot, term: Term, binding: Binding) -> Optional[Binding]:
    """Extend binding so that slot matches term, or None on mismatch."""
    if isinstance(slot, str):
        bound = binding.get(slot)
        if bound is None:
            out = dict(binding)
            out[slot] = term
            return out
        return binding if bound == term else None
    return binding if slot == term else None


def match_one(pattern: TriplePattern, t: Triple, binding: Optional[Binding] = None) -> Optional[Binding]:
    """Binding extending ``binding`` under which pattern equals t, else None."""
    b: Optional[Binding] = dict(binding) if binding else {}
    for slot, term in ((pattern.subject, t.subject), (pattern.predicate, t.predicate), (pattern.object, t.object)):
        b = _matches(slot, term, b)
        if b is None:
            return None
    return b


class Graph:
    """Set of triples with by-subject / by-predicate / by-object indexes.

    Single writer or multiple readers at any moment; callers must not
    interleave a writer with readers.
    """

    def __init__(self, triples: Iterable[Triple] = ()):
        self._triples: set[Triple] = set()
        self._by_subject: dict[Term, set[Triple]] = {}
        self._by_predicate: dict[Term, set[Triple]] = {}
        self._by_object: dict[Term, set[Triple]] = {}
        for t in triples:
            self.insert(t)

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, t: Triple) -> bool:
        return t in self._triples

    def insert(self, t: Triple) -> int:
        """Add a triple; returns the graph size afterwards."""
        if t not in self._triples:
            self._triples.add(t)
            self._by_subject.setdefault(t.subject, set()).add(t)
            self._by_predicate.setdefault(t.predicate, set()).add(t)
            self._by_object.setdefault(t.object, set()).add(t)
        return len(self._triples)

    def remove(self, t: Triple) -> int:
        """Discard a triple if present; returns the graph size afterwards."""
        if t in self._triples:
            self._triples.discard(t)
            for index, key in (
                (self._by_subject, t.subject),
                (self._by_predicate, t.predicate),
                (self._by_object, t.object),
            ):
                bucket = index[key]
                bucket.discard(t)
                if not bucket:
                    del index[key]
        return len(self._triples)

    def update(self, triples: Iterable[Triple]) -> int:
        for t in triples:
            self.insert(t)
        return len(self._triples)

    def candidates(self, pattern: TriplePattern) -> Iterable[Triple]:
        """Smallest index bucket consistent with the pattern's concrete slots."""
        buckets = []
        if isinstance(pattern.subject, Term):
            buckets.append(self._by_subject.get(pattern.subject, set()))
        if isinstance(pattern.predicate, Term):
            buckets.append(self._by_predicate.get(pattern.predicate, set()))
        if isinstance(pattern.object, Term):
            buckets.append(self._by_object.get(pattern.object, set()))
        if not buckets:
            return self._triples
        return min(buckets, key=len)

    def match(self, pattern: TriplePattern) -> list[Binding]:
        """All bindings under which the pattern occurs in the graph.

        Order is deterministic: lexicographic by the bound terms in the
        pattern's variable order.
        """
        variables = []
        for slot in (pattern.subject, pattern.predicate, pattern.object):
            if isinstance(slot, str) and slot not in variables:
                variables.append(slot)
        results = []
        for t in self.candidates(pattern):
            b = match_one(pattern, t)
            if b is not None:
                results.append(b)
        results.sort(key=lambda b: tuple(b[v].sort_key() for v in variables))
        return results

    def check_index_coherence(self) -> bool:
        """True iff every index entry is in the master set and vice versa."""
        indexed = set()
        for index in (self._by_subject, self._by_predicate, self._by_object):
            for bucket in index.values():
                if not bucket:
                    return False
                indexed |= bucket
        for t in self._triples:
            if (
                t not in self._by_subject.get(t.subject, set())
                or t not in self._by_predicate.get(t.predicate, set())
                or t not in self._by_object.get(t.object, set())
            ):
                return False
        return indexed == self._triples or (not indexed and not self._triples)


# --- N-Triples-style flat-file serialization -------------------------------


def export_ntriples(g: Graph) -> str:
    """One triple per line, sorted for byte-stable output."""
    lines = sorted(str(t) for t in g)
    return "".join(line + "\n" for line in lines)


def _parse_term(token: str, lineno: int) -> Term:
    if token.startswith("<") and token.endswith(">"):
        return Term(token[1:-1])
    if token.startswith('"'):
        end = _closing_quote(token, lineno)
        lexical = token[1:end].replace('\\"', '"').replace("\\\\", "\\")
        rest = token[end + 1 :]
        if not (rest.startswith("^^<") and rest.endswith(">")):
            raise RdfError(f"line {lineno}: literal missing ^^<datatype>: {token!r}")
        dt_iri = rest[3:-1]
        try:
            dt = Datatype(dt_iri)
        except ValueError:
            raise RdfError(f"line {lineno}: unsupported datatype <{dt_iri}>") from None
        return Term(lexical, dt)
    raise RdfError(f"line {lineno}: unrecognized term {token!r}")


def _closing_quote(token: str, lineno: int) -> int:
    i = 1
    while i < len(token):
        if token[i] == "\\":
            i += 2
            continue
        if token[i] == '"':
            return i
        i += 1
    raise RdfError(f"line {lineno}: unterminated literal {token!r}")


def _split_terms(line: str, lineno: int) -> list[str]:
    """Split a statement body into term tokens, honoring quoted literals."""
    tokens = []
    i = 0
    n = len(line)
    while i < n:
        if line[i].isspace():
            i += 1
            continue
        start = i
        if line[i] == '"':
            i = start + _closing_quote(line[start:], lineno) + 1
            while i < n and not line[i].isspace():
                i += 1
        else:
            while i < n and not line[i].isspace():
                i += 1
        tokens.append(line[start:i])
    return tokens


def import_ntriples(text: str) -> Graph:
    """Parse the flat-file format back into a Graph.

    Errors carry the 1-based line number and a reason.
    """
    g = Graph()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not line.endswith("."):
            raise RdfError(f"line {lineno}: missing terminating '.'")
        body = line[:-1].rstrip()
        tokens = _split_terms(body, lineno)
        if len(tokens) != 3:
            raise RdfError(f"line {lineno}: expected 3 terms, got {len(tokens)}")
        s, p, o = (_parse_term(tok, lineno) for tok in tokens)
        try:
            g.insert(Triple(s, p, o))
        except RdfError as exc:
            raise RdfError(f"line {lineno}: {exc}") from None
    return g

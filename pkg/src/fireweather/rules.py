"""Horn rule parsing and forward chaining over the triple store.

Surface syntax, one rule per line::

    sensor_id(?s) ^ notdifficult(?s, ?rh) ^ greaterThan(?rh, 16) -> DifficultyofControle(?s, notDifficult)

Class atoms ``name(?v)`` match rdf:type triples, data-property atoms
``name(?v, ?w)`` match property triples, and ``greaterThan(?v, N)`` is the
single supported numeric builtin.  Chaining runs to the least fixpoint with
set semantics; every inferred fact carries the rule and bindings that
produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from . import vocab
from .rdf import Binding, Graph, Term, Triple, TriplePattern, iri, string


class RuleParseError(Exception):
    """Rule syntax or safety violation, with line/column context."""

    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}" if column else f"line {line}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ClassAtom:
    class_name: str
    variable: str

    def pattern(self) -> TriplePattern:
        return TriplePattern(self.variable, iri(vocab.RDF_TYPE), iri(vocab.class_iri(self.class_name)))

    def render(self) -> str:
        return f"{self.class_name}({self.variable})"


@dataclass(frozen=True)
class DataPropertyAtom:
    property_name: str
    subject: str
    #: a variable name or a constant label/number rendered as a string literal
    value: Union[str, Term]

    def pattern(self) -> TriplePattern:
        obj = self.value if isinstance(self.value, Term) else self.value
        return TriplePattern(self.subject, iri(vocab.prop_iri(self.property_name)), obj)

    def render(self) -> str:
        value = self.value if isinstance(self.value, str) else self.value.value
        return f"{self.property_name}({self.subject}, {value})"


@dataclass(frozen=True)
class BuiltinGreaterThan:
    variable: str
    threshold: float

    def holds(self, binding: Binding) -> bool:
        term = binding.get(self.variable)
        if term is None or not term.is_literal:
            return False
        try:
            value = float(term.value)
        except ValueError:
            return False
        return value > self.threshold

    def render(self) -> str:
        t = self.threshold
        lexical = str(int(t)) if t == int(t) else repr(t)
        return f"greaterThan({self.variable}, {lexical})"


BodyAtom = Union[ClassAtom, DataPropertyAtom, BuiltinGreaterThan]


@dataclass(frozen=True)
class Rule:
    body: tuple[BodyAtom, ...]
    head: DataPropertyAtom

    def render(self) -> str:
        return " ^ ".join(a.render() for a in self.body) + " -> " + self.head.render()

    def pattern_atoms(self) -> list[tuple[int, BodyAtom]]:
        return [(i, a) for i, a in enumerate(self.body) if not isinstance(a, BuiltinGreaterThan)]


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[Rule, ...]

    def render(self) -> str:
        return "".join(r.render() + "\n" for r in self.rules)

    def __len__(self) -> int:
        return len(self.rules)


@dataclass(frozen=True)
class InferredFact:
    subject: Term
    property_iri: str
    label: str
    rule: Rule
    bindings: tuple[tuple[str, Term], ...]

    def triple(self) -> Triple:
        return Triple(self.subject, iri(self.property_iri), string(self.label))


# --- parsing ---------------------------------------------------------------


class _Lexer:
    PUNCT = {"(": "LPAREN", ")": "RPAREN", ",": "COMMA", "^": "AND"}

    def __init__(self, text: str, line: int):
        self.text = text
        self.line = line
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._scan()
        self.index = 0

    def _scan(self):
        text, n = self.text, len(self.text)
        i = 0
        while i < n:
            c = text[i]
            if c.isspace():
                i += 1
                continue
            col = i + 1
            if text.startswith("->", i):
                self.tokens.append(("ARROW", "->", col))
                i += 2
            elif c in self.PUNCT:
                self.tokens.append((self.PUNCT[c], c, col))
                i += 1
            elif c == "?":
                j = i + 1
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                if j == i + 1:
                    raise RuleParseError("empty variable name", self.line, col)
                self.tokens.append(("VAR", text[i:j], col))
                i = j
            elif c.isdigit() or (c in "+-." and i + 1 < n and text[i + 1].isdigit()):
                j = i
                while j < n and (text[j].isdigit() or text[j] in "+-.eE"):
                    j += 1
                self.tokens.append(("NUMBER", text[i:j], col))
                i = j
            elif c.isalpha() or c == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("NAME", text[i:j], col))
                i = j
            else:
                raise RuleParseError(f"unexpected character {c!r}", self.line, col)
        self.tokens.append(("EOF", "", n + 1))

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.index]
        if tok[0] != kind:
            raise RuleParseError(f"expected {kind}, got {tok[1]!r}", self.line, tok[2])
        self.index += 1
        return tok


def _parse_atom(lx: _Lexer, head: bool) -> BodyAtom:
    _, name, col = lx.take("NAME")
    lx.take("LPAREN")
    kind, first, fcol = lx.peek()
    if kind != "VAR":
        raise RuleParseError(f"atom argument must be a variable, got {first!r}", lx.line, fcol)
    lx.take("VAR")
    if lx.peek()[0] == "RPAREN":
        lx.take("RPAREN")
        if head:
            raise RuleParseError("head atom needs a constant second argument", lx.line, col)
        if name == "greaterThan":
            raise RuleParseError("greaterThan takes two arguments", lx.line, col)
        return ClassAtom(name, first)
    lx.take("COMMA")
    kind, second, scol = lx.peek()
    if name == "greaterThan":
        if kind != "NUMBER":
            raise RuleParseError("greaterThan threshold must be numeric", lx.line, scol)
        lx.take("NUMBER")
        lx.take("RPAREN")
        return BuiltinGreaterThan(first, float(second))
    if name in ("lessThan", "equal", "notEqual", "greaterThanOrEqual", "lessThanOrEqual"):
        raise RuleParseError(f"unsupported builtin {name!r}: only greaterThan is available", lx.line, col)
    if kind == "VAR":
        lx.take("VAR")
        value: Union[str, Term] = second
    elif kind in ("NAME", "NUMBER"):
        lx.take(kind)
        value = string(second)
    else:
        raise RuleParseError(f"unexpected atom argument {second!r}", lx.line, scol)
    lx.take("RPAREN")
    if head and not isinstance(value, Term):
        raise RuleParseError("head atom object must be a constant", lx.line, scol)
    return DataPropertyAtom(name, first, value)


def _atom_variables(atom: BodyAtom) -> set[str]:
    if isinstance(atom, ClassAtom):
        return {atom.variable}
    if isinstance(atom, BuiltinGreaterThan):
        return {atom.variable}
    out = {atom.subject}
    if isinstance(atom.value, str):
        out.add(atom.value)
    return out


def parse_rule(text: str, line: int = 1) -> Rule:
    lx = _Lexer(text, line)
    body: list[BodyAtom] = [_parse_atom(lx, head=False)]
    while lx.peek()[0] == "AND":
        lx.take("AND")
        body.append(_parse_atom(lx, head=False))
    lx.take("ARROW")
    head = _parse_atom(lx, head=True)
    if not isinstance(head, DataPropertyAtom):
        raise RuleParseError("head must be a data-property atom", line)
    lx.take("EOF")

    bound = set()
    for atom in body:
        if not isinstance(atom, BuiltinGreaterThan):
            bound |= _atom_variables(atom)
    for atom in body:
        if isinstance(atom, BuiltinGreaterThan) and atom.variable not in bound:
            raise RuleParseError(f"builtin variable {atom.variable} is not bound by any body atom", line)
    unbound = _atom_variables(head) - bound
    if unbound:
        raise RuleParseError(f"unsafe rule: head variable {sorted(unbound)[0]} not bound in body", line)
    return Rule(tuple(body), head)


def parse_rules(text: str) -> RuleSet:
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        rules.append(parse_rule(stripped, lineno))
    return RuleSet(tuple(rules))


def load_rules(path: str) -> RuleSet:
    with open(path, encoding="utf-8") as fh:
        return parse_rules(fh.read())


# --- forward chaining ------------------------------------------------------


def _match_body(g: Graph, atoms: list[BodyAtom], binding: Binding,
                delta: Optional[set[Triple]], delta_slot: Optional[int],
                position: int = 0) -> Iterable[Binding]:
    """All bindings satisfying the remaining atoms.

    When ``delta_slot`` names an atom index, that atom is matched against the
    delta set only (semi-naive restriction).
    """
    if position == len(atoms):
        yield binding
        return
    atom = atoms[position]
    if isinstance(atom, BuiltinGreaterThan):
        if atom.holds(binding):
            yield from _match_body(g, atoms, binding, delta, delta_slot, position + 1)
        return
    pattern = _bind_pattern(atom.pattern(), binding)
    source: Iterable[Triple]
    if delta_slot == position and delta is not None:
        source = delta
    else:
        source = g.candidates(pattern)
    from .rdf import match_one

    for t in source:
        extended = match_one(pattern, t, binding)
        if extended is not None:
            yield from _match_body(g, atoms, extended, delta, delta_slot, position + 1)


def _bind_pattern(pattern: TriplePattern, binding: Binding) -> TriplePattern:
    def resolve(slot):
        if isinstance(slot, str) and slot in binding:
            return binding[slot]
        return slot

    return TriplePattern(resolve(pattern.subject), resolve(pattern.predicate), resolve(pattern.object))


def _fire(rule: Rule, binding: Binding) -> InferredFact:
    subject = binding[rule.head.subject]
    label = rule.head.value.value if isinstance(rule.head.value, Term) else binding[rule.head.value].value
    return InferredFact(
        subject=subject,
        property_iri=vocab.prop_iri(rule.head.property_name),
        label=label,
        rule=rule,
        bindings=tuple(sorted(binding.items(), key=lambda kv: kv[0])),
    )


def forward_chain(g: Graph, ruleset: RuleSet) -> list[InferredFact]:
    """Least fixpoint of the rule set over a snapshot of the graph.

    Semi-naive: after the first round, a rule only re-fires when at least one
    body atom matches a newly derived triple.  The input graph is not
    modified; derived triples live in an internal working copy.
    """
    work = Graph(g)
    facts: dict[Triple, InferredFact] = {}
    delta: set[Triple] = set(work)
    first_round = True
    while delta:
        new_delta: set[Triple] = set()
        for rule in ruleset.rules:
            atoms = list(rule.body)
            slots = [i for i, _ in rule.pattern_atoms()] if not first_round else [None]
            seen: set[tuple] = set()
            for slot in slots:
                for binding in _match_body(work, atoms, {}, None if first_round else delta, slot):
                    key = tuple(sorted((k, v) for k, v in binding.items()))
                    if key in seen:
                        continue
                    seen.add(key)
                    fact = _fire(rule, binding)
                    t = fact.triple()
                    if t not in work and t not in new_delta:
                        new_delta.add(t)
                        facts[t] = fact
        for t in new_delta:
            work.insert(t)
        delta = new_delta
        first_round = False
    ordered = sorted(facts.values(), key=lambda f: (f.subject.sort_key(), f.property_iri, f.label))
    return ordered


def verify_provenance(g: Graph, ruleset: RuleSet, facts: Iterable[InferredFact]) -> bool:
    """Re-check every fact's bindings against the graph plus all derived triples."""
    work = Graph(g)
    fact_list = list(facts)
    for f in fact_list:
        work.insert(f.triple())
    for f in fact_list:
        binding = dict(f.bindings)
        for atom in f.rule.body:
            if isinstance(atom, BuiltinGreaterThan):
                if not atom.holds(binding):
                    return False
            else:
                pattern = _bind_pattern(atom.pattern(), binding)
                if not work.match(pattern):
                    return False
        head_subject = binding.get(f.rule.head.subject)
        if head_subject != f.subject:
            return False
    return True

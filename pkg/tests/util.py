"""Shared random-instance generators and brute-force oracles."""

from __future__ import annotations

import random

from fireweather.rdf import (
    Binding,
    Graph,
    Term,
    Triple,
    TriplePattern,
    decimal,
    integer,
    iri,
    match_one,
    string,
)

SUBJECTS = [f"urn:test:s{i}" for i in range(6)]
PREDICATES = [f"urn:test:p{i}" for i in range(4)]


def random_term(rng: random.Random) -> Term:
    kind = rng.randrange(4)
    if kind == 0:
        return iri(rng.choice(SUBJECTS))
    if kind == 1:
        return string(rng.choice(["a", "b", "c", "17", "xyz"]))
    if kind == 2:
        return integer(rng.randrange(-5, 50))
    return decimal(round(rng.uniform(-5.0, 50.0), 1))


def random_triple(rng: random.Random) -> Triple:
    return Triple(iri(rng.choice(SUBJECTS)), iri(rng.choice(PREDICATES)), random_term(rng))


def random_graph(rng: random.Random, max_size: int) -> Graph:
    g = Graph()
    for _ in range(rng.randrange(max_size + 1)):
        g.insert(random_triple(rng))
    return g


def random_slot(rng: random.Random, variables: list[str]):
    if rng.random() < 0.5:
        return rng.choice(variables)
    return random_term(rng)


def random_pattern(rng: random.Random, variables: list[str]) -> TriplePattern:
    subject = rng.choice(variables) if rng.random() < 0.6 else iri(rng.choice(SUBJECTS))
    predicate = rng.choice(variables) if rng.random() < 0.3 else iri(rng.choice(PREDICATES))
    obj = random_slot(rng, variables)
    return TriplePattern(subject, predicate, obj)


def brute_force_match(g: Graph, pattern: TriplePattern) -> list[Binding]:
    """Naive filter of every triple against the pattern."""
    out = []
    for t in g:
        b = match_one(pattern, t)
        if b is not None:
            out.append(b)
    return out


def brute_force_join(g: Graph, patterns: list[TriplePattern]) -> list[Binding]:
    """Nested loop over the full triple set per pattern, no indexes."""
    bindings: list[Binding] = [{}]
    for pattern in patterns:
        extended = []
        for b in bindings:
            for t in g:
                nb = match_one(pattern, t, b)
                if nb is not None:
                    extended.append(nb)
        bindings = extended
    return bindings

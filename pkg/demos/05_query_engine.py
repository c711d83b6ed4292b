"""Parse and evaluate queries over a small graph.

Run from the repository root: python3 demos/05_query_engine.py
"""

from fireweather.rdf import Graph, Triple, decimal, iri
from fireweather.sparql import evaluate, parse_query

g = Graph([
    Triple(iri("urn:ssn:sensor:1"), iri("urn:ssn:prop:hasWind"), decimal(45.0)),
    Triple(iri("urn:ssn:sensor:2"), iri("urn:ssn:prop:hasWind"), decimal(12.0)),
    Triple(iri("urn:ssn:sensor:1"), iri("urn:ssn:prop:hasRain"), decimal(0.2)),
    Triple(iri("urn:ssn:sensor:2"), iri("urn:ssn:prop:hasRain"), decimal(6.4)),
])

# Variables may sit in any position, including the predicate.
open_query = """
SELECT ?Sensor_id ?WindSpeed
WHERE { ?Sensor_id ?observedBy ?WindSpeed
FILTER (?WindSpeed >40.00) }
"""
table = evaluate(parse_query(open_query), g)
print("readings above 40:")
print(table.to_text())

# Joins happen on shared variables across patterns.
join_query = """
PREFIX p: <urn:ssn:prop:>
SELECT ?s ?wind ?rain
WHERE { ?s p:hasWind ?wind . ?s p:hasRain ?rain . FILTER (?rain > 1.0) }
"""
print("rainy sensors with their wind:")
print(evaluate(parse_query(join_query), g).to_csv(), end="")

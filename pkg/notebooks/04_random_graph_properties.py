"""
Properties on random graphs
===========================

Values always lie in [0, 1], and a vertex scores exactly 1 precisely when it
is adjacent to every other vertex. We check both on seeded random graphs,
many of which are disconnected.
"""

# %%
from fractions import Fraction

from harmonic_families.verify import (
    RandomGraphSpec,
    check_bounds,
    check_degree_characterization,
    check_random_properties,
    random_corpus,
    random_graph,
)

g = random_graph(RandomGraphSpec(50, Fraction(1, 10), seed=7))
print(g, check_bounds(g), check_degree_characterization(g))

# %%
# The same spec always produces the same edges (PCG64 raw words).
spec = RandomGraphSpec(30, Fraction(1, 4), seed=42)
print(random_graph(spec).edges == random_graph(spec).edges)

# %%
report = check_random_properties(random_corpus(500))
print(report.graphs_checked, "graphs,", report.disconnected, "disconnected,",
      report.isolated_vertices, "isolated vertices, passed:", report.passed)

"""
Harmonic centrality of a small caterpillar
==========================================

We build a ten-vertex caterpillar tree and compute the normalized harmonic
centrality of every vertex exactly.
"""

# %%
# A caterpillar: a spine ``0-1-2-3-4`` with leaves hanging off vertices 1, 2
# and 3. Vertex 2 is the middle of the spine.
from harmonic_families import Graph, bfs_distances, centrality_report, normalized_harmonic

edges = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (1, 6), (2, 7), (3, 8), (3, 9)]
g = Graph(10, edges)
print(g, "degrees:", g.degrees())

# %%
# Distances from the middle vertex. Three vertices are adjacent, six more sit
# at distance two, so the reciprocal sum is ``3 + 6/2 = 6`` and dividing by
# ``order - 1 = 9`` gives 2/3.
print(bfs_distances(g, 2).dist)
print("H(2) =", normalized_harmonic(g, 2))

# %%
# The full report ranks every vertex; ties go to the smaller id.
report = centrality_report(g)
for cv in report.top(4):
    print(cv.vertex, cv.raw, cv.normalized, float(cv.normalized))

# %%
# Disconnected pairs simply contribute nothing. An isolated vertex scores 0.
h = Graph(4, [(0, 1), (1, 2)])
print([str(v.normalized) for v in centrality_report(h).values])

"""
Generating the graph families
=============================

Each family generator returns the graph together with display labels and the
structural role of every vertex.
"""

# %%
from harmonic_families import Book, CompleteBipartite, Helm, Ladder, edge_count, generate
from harmonic_families.formats import format_edge_list, to_dot

helm = generate(Helm(4))
for v in helm.graph.vertices():
    print(v, helm.labels[v], helm.roles[v], sorted(helm.graph.neighbors(v)))

# %%
# Vertex ids follow fixed index maps. For a ladder, ``(u_i, v_2)`` sits at
# ``m + i - 1``.
ladder = generate(Ladder(4))
print(ladder.labels)

# %%
# Edge counts follow from each construction and match the generators.
for spec in (Helm(4), Ladder(4), Book(3), CompleteBipartite(3, 4)):
    print(spec, generate(spec).graph.size, edge_count(spec))

# %%
# The CLI writes the same edge-list document shown here; ``--dot`` gives a
# Graphviz rendering with the family labels.
print(format_edge_list(generate(Book(2)).graph, generate(Book(2))))
print(to_dot(generate(Book(2)).graph, generate(Book(2))))

"""Exhaustive multi-fold choosability at desk scale.

List assignments are enumerated once per color-renaming class, realized
from Venn-cell cardinality vectors, ordered by universe size.  A "no"
verdict always comes with the first failing assignment in that order.
"""

from chooselab import choosable, colorable_ab, enumerate_assignments_canonical
from chooselab.plane import complete_bipartite, cycle_graph, path_graph

edge = path_graph(2)
print("canonical 1-list assignments on an edge:")
for lists in enumerate_assignments_canonical(edge, {0: 1, 1: 1}):
    print("  ", dict(sorted((v, sorted(c)) for v, c in lists.items())))

print("\ncanonical 2-list assignments on an edge (overlap 2, 1, 0):")
for lists in enumerate_assignments_canonical(edge, {0: 2, 1: 2}):
    print("  ", dict(sorted((v, sorted(c)) for v, c in lists.items())))

c5, c4 = cycle_graph(5), cycle_graph(4)
v = choosable(c5, 2, 1)
print("\nC5 (2,1)-choosable?", v.ok, "- witness:",
      {k: sorted(s) for k, s in sorted(v.witness.items())})
print("C4 (2,1)-choosable?", choosable(c4, 2, 1).ok)

k33 = complete_bipartite(3, 3)
v = choosable(k33, 2, 1)
print("K33 (2,1)-choosable?", v.ok, "- witness:",
      {k: sorted(s) for k, s in sorted(v.witness.items())})

print("\nC5 (5,2)-colorable?", colorable_ab(c5, 5, 2))
print("C5 (4,2)-colorable?", colorable_ab(c5, 4, 2),
      "(the 2-fold chromatic number of C5 is 5)")

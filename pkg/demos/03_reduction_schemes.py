"""Reduction schemes, symbolically: the star configuration.

A degree-k vertex u with k-1 neighbors of degree 3 carries the worst-case
profile u: (11m, 4m), leaves: (7m, 4m).  Saves color u while avoiding one
leaf's list; deletes need the list to cover the vertex's own demand plus
every live neighbor's.  The printed order for k = 4 skips one delete and
breaks; interleaving repairs it.
"""

from chooselab.plane import PlaneGraph
from chooselab.reduction import Delete, Save, SymbolicState, run_scheme


def star_state(k):
    G = PlaneGraph(edges=[(0, i) for i in range(1, k)])
    prof = {0: (11, 4), **{i: (7, 4) for i in range(1, k)}}
    return SymbolicState.from_profile(G, prof)


def show(title, steps, state):
    trace = run_scheme(state, steps)
    print(f"\n{title}: legal={trace.legal}, deletes everything="
          f"{trace.exhaustive}")
    for rec in trace.branches[0].records:
        lhs = "" if rec.lhs is None else f"  {rec.lhs} >= {rec.rhs}"
        flag = "" if rec.verdict == "legal" else f"  <-- {rec.detail}"
        print(f"  {rec.step:<14} {rec.verdict:<8}{lhs}{flag}")


literal = [Save(0, 1), Delete(1), Save(0, 2), Delete(0), Delete(3)]
repaired = [Save(0, 1), Delete(1), Save(0, 2), Delete(2), Delete(0), Delete(3)]

show("printed scheme, k = 4 (v2 never deleted)", literal, star_state(4))
show("repaired scheme, k = 4", repaired, star_state(4))

# scale invariance: every inequality is homogeneous in m
for m in (1, 2, 3):
    G = PlaneGraph(edges=[(0, i) for i in range(1, 4)])
    st = SymbolicState.from_profile(G, {0: (11, 4), 1: (7, 4), 2: (7, 4),
                                        3: (7, 4)}, m)
    t = run_scheme(st, repaired, m=m)
    print(f"m = {m}: repaired scheme legal = {t.legal}")

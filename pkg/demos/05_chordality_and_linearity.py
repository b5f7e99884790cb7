"""
Chordal complements and 2-linear resolutions
============================================

An edge ideal has a 2-linear resolution exactly when the complement of its
graph is chordal. Here both sides are computed independently on random
graphs: chordality by maximum cardinality search, linearity from the full
Betti table given by Hochster's formula.
"""

from collections import Counter

from fatforest import (
    Graph,
    flag_complex,
    hochster_betti_table,
    is_chordal,
    is_two_linear,
    random_graph,
)

tally = Counter()
for seed in range(300):
    g = random_graph(1 + seed % 8, 0.5, seed)
    # flag(g) is the Stanley-Reisner complex of the edge ideal of the complement of g
    linear = is_two_linear(hochster_betti_table(flag_complex(g)))
    tally[(is_chordal(g), linear)] += 1
print("(chordal, 2-linear) counts:", dict(tally))

# The five-cycle is its own complement and the smallest failure.
c5 = Graph.cycle(5)
ok, cycle = is_chordal(c5, certificate=True)
print("C5 chordal:", ok, "certificate:", cycle)
print("Betti table:", hochster_betti_table(flag_complex(c5)).rows())

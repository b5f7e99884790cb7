"""
Ferrers ideals
==============

The bipartite graph with edges x_p y_q for q <= lambda_p has an edge ideal
whose independence complex is a chain of simplices, one per distinct row
length. The Betti numbers have a closed form in the row lengths.
"""

from fatforest import Tableau, corso_nagel_betti, ferrers_complex, ferrers_labels, run_pipeline

t = Tableau((6, 4, 4, 2, 1))
labels = ferrers_labels(t)
c = ferrers_complex(t)

# Facets, shown with x/y names.
for f in c.facets:
    print("  [" + ", ".join(labels[v] for v in f) + "]")

# Pipeline versus the closed form sum_j C(lambda_j + j - 1, i) - C(m, i + 1).
vec = run_pipeline(c).betti.linear()
print("pipeline:   ", vec)
print("closed form:", [corso_nagel_betti(t, i) for i in range(1, len(vec) + 1)])

# Generators count the boxes of the tableau.
print("beta_1 =", vec[0], "=", sum(t.rows))

# Staircases n, n-1, ..., 1 have Betti numbers n C(n, i) - C(n, i + 1).
for n in range(1, 6):
    print(n, run_pipeline(ferrers_complex(range(n, 0, -1))).betti.linear())

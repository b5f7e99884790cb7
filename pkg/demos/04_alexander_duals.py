"""
Alexander duals of uniform forests
==================================

Glue k simplices of dimension d in a chain, each along an r-simplex. The
Alexander dual has only two nonzero Betti numbers past degree zero, and its
ideal has a linear resolution exactly when r = d - 1.
"""

from fatforest import (
    UniformForestSpec,
    alexander_dual,
    has_linear_resolution,
    hochster_betti_table,
    uniform_dual_betti,
    uniform_forest,
)

for d, r, k in [(1, 0, 2), (2, 1, 3), (2, 0, 3), (3, -1, 2), (3, 1, 3)]:
    spec = UniformForestSpec(d, r, k)
    dual = alexander_dual(uniform_forest(spec).complex())
    table = hochster_betti_table(dual)
    print(f"(d, r, k) = {(d, r, k)}, n = {spec.n}")
    print("  dual facets:", dual.facets)
    print("  oracle table:", table.rows())
    print("  predicted:   ", sorted(uniform_dual_betti(spec).items()))
    print("  linear resolution:", has_linear_resolution(table))

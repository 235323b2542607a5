"""Generator gallery: instances whose optimal bottleneck is known in advance.

Max-gap instances reduce "find the largest gap between consecutive sorted
values" to a solve: candidates sit at the values on the x axis, terminals
hug both extremes, and the tree has to bridge every gap, so the optimum
equals the largest one.

Membership instances put candidates at (1,0)..(m,0), anchors at (0,0) and
(m+1,0), and terminals on the grid row (i,1).  In an optimal tree each
on-grid terminal attaches straight down, so checking the external edges
reveals whether every terminal sat exactly on a grid point.
"""

import math

import numpy as np

from bsteiner import (
    gen_maxgap_instance,
    gen_membership_instance,
    max_gap,
    solve,
    verify_membership,
)

values = [3.0, 11.0, 4.5, 10.0, 2.0, 17.5]
inst = gen_maxgap_instance(values, n=4, seed=1)
got = math.sqrt(solve(inst.P, inst.S).lambda_star)
print("values:        ", values)
print("sorted:        ", sorted(values))
print("largest gap:   ", max_gap(values))
print("solver found:  ", got)
assert got == inst.expected
print()

rng = np.random.default_rng(0)
for trial in range(3):
    m = int(rng.integers(3, 12))
    f = tuple(int(x) for x in rng.integers(1, m + 1, 4))
    clean = gen_membership_instance(f, m)
    on_grid = verify_membership(solve(clean.P, clean.S).tree, clean)
    j = int(rng.integers(1, 5))
    moved = gen_membership_instance(f, m, perturb=(j, (f[j - 1] + 0.5, 1.0)))
    off_grid = verify_membership(solve(moved.P, moved.S).tree, moved)
    print(f"m={m:2d} f={f}: clean instance on-grid? {on_grid};"
          f" after nudging terminal {j}: {off_grid}")
    assert on_grid and not off_grid

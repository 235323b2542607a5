"""Watch the threshold decision flip exactly at the optimum.

The decision procedure answers "is the optimal bottleneck strictly below
lambda?" by deleting every spanning-tree edge of length >= lambda and
asking whether some surviving component is reachable from all terminals
through cone edges shorter than lambda.  The returned component set is
non-empty exactly when the answer is yes, which is what the binary
search drives on.
"""

import math

import numpy as np

from bsteiner import brute_force_optimum, compare_to_optimal, gen_random_instance, preprocess

P, S = gen_random_instance(n=8, m=14, extent=10.0, seed=7)
ctx = preprocess(P, S)
lam_sq, _ = brute_force_optimum(P, S)
lam = math.sqrt(lam_sq)
print(f"instance: {len(P)} terminals, {len(S)} candidates, optimum {lam:.4f}")
print()
print(f"{'lambda':>10}  {'lambda^2':>12}  candidate set")
for factor in (0.25, 0.5, 0.9, 0.999999, 1.0, 1.000001, 1.1, 2.0, 4.0):
    probe = lam * factor
    J = compare_to_optimal(ctx, probe * probe)
    verdict = "optimum < lambda" if J else "optimum >= lambda"
    print(f"{probe:10.4f}  {probe * probe:12.4f}  {sorted(J)!s:<12} {verdict}")

print()
print("the flip happens strictly above the optimum: the predicate is")
print("'optimum < lambda', so probing the optimum itself stays empty")

# Monotonicity: once non-empty, larger thresholds stay non-empty.
probes = np.linspace(0.1, 3.0 * lam, 40)
nonempty = [bool(compare_to_optimal(ctx, float(t * t))) for t in probes]
first = nonempty.index(True)
assert all(nonempty[first:])
print(f"monotone over {len(probes)} probes: first non-empty at lambda ~ {probes[first]:.4f}")

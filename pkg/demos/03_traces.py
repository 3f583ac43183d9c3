"""Block traces, overlap numbers and induced designs on a point partition.

The quadric x0*x1 + x2*x3 = 1 in GF(2)^4 gives a symmetric 2-(16,6,2) design;
the cosets of a totally singular plane split the points into four classes.
Run: python3 demos/03_traces.py
"""

import itertools

from flagdesigns import BlockSystem, IncidenceStructure, TraceError, is_2design, overlap_number, trace_profile
from flagdesigns.designs import all_triples

pts = list(itertools.product(range(2), repeat=4))
index = {p: i for i, p in enumerate(pts)}
quadric = [p for p in pts if (p[0] * p[1] + p[2] * p[3]) % 2 == 1]
blocks = [sorted(index[tuple((a + b) % 2 for a, b in zip(p, t))] for p in quadric) for t in pts]
D = IncidenceStructure(16, blocks)
print("2-(16,6,%d)" % is_2design(D))

# cosets of W = <e0, e2>
sigma = BlockSystem.from_labels([2 * p[1] + p[3] for p in pts])
prof = trace_profile(D, sigma)
print("k0 =", prof.k0, " classes met per block:", set(prof.classes_met()))
print("theta =", overlap_number(D, sigma).theta)

# A partition that gives mixed trace sizes is rejected with a witness.
toy = all_triples(4)
try:
    trace_profile(toy, BlockSystem.from_classes([[0, 1], [2, 3]], 4))
except TraceError as exc:
    print("rejected:", exc)

"""Designs from projective and affine geometry, with their groups.

Run: python3 demos/02_geometry.py
"""

from flagdesigns import (
    ag_lines_design,
    collinear_triples_design,
    is_2design,
    is_flag_transitive,
    lemma_pp_ratio,
    noncollinear_triples_design,
)
from flagdesigns.fields import field
from flagdesigns.geometry import affine_group, projective_group

F = field(2, 2)
print("GF(4) modulus:", F.modulus, " w*w =", F.mul(2, 2))

for name, D, G in [
    ("collinear triples of PG(3,2)", collinear_triples_design(4, 2), projective_group(4, 2)),
    ("lines of AG(2,3)", ag_lines_design(2, 3), affine_group(2, 3)),
]:
    lam = is_2design(D)
    print(f"{name}: 2-({D.v},{D.k},{lam}), b={D.b}, |G|={G.order()}, "
          f"flag-transitive: {is_flag_transitive(D, G)}")

D = noncollinear_triples_design(3, 5)
pp = lemma_pp_ratio(D.v, D.k, is_2design(D))
print(f"noncollinear triples of PG(2,5): v={D.v}, b={D.b}, r={pp.r}, r/lambda={pp.ratio}")

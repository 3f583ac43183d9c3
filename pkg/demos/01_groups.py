"""Permutation groups: orders, stabilizers and block systems.

Run: python3 demos/01_groups.py
"""

from flagdesigns import (
    PermutationGroup,
    minimal_block_system,
    is_primitive,
    perm_from_cycles,
    point_stabilizer,
)
from flagdesigns.geometry import projective_group

# The dihedral group of the hexagon keeps the pairs of opposite vertices together,
# and also the two triangles {0,2,4}, {1,3,5}.
r = perm_from_cycles("(0 1 2 3 4 5)", 6)
s = perm_from_cycles("(1 5)(2 4)", 6)
D6 = PermutationGroup([r, s], 6)
print("order of D6:", D6.order())
print("stabilizer of 0:", point_stabilizer(D6, 0).order())
print("block of 0 and 3:", minimal_block_system(D6, 0, 3))
print("block of 0 and 2:", minimal_block_system(D6, 0, 2))
print("primitive:", is_primitive(D6))

# PSL(3,2) on the seven points of the Fano plane is 2-transitive, so primitive.
G = projective_group(3, 2)
print("\nPSL(3,2) order:", G.order(), "primitive:", is_primitive(G))
print("two-point stabilizer:", point_stabilizer(point_stabilizer(G, 0), 1).order())

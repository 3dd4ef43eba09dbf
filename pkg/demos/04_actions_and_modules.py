"""Action classes: which module structures a simplicial set calls for.

Whenever a face sends a simplex to the basepoint, the corresponding tensor
factor acts on the coefficient module.  Sites are identified across levels by
the coface compatibility rules; each identified class must be served by one
module action, and the class carries a handedness (left/right law) read off
from pairs of equal factorizations.
"""

from hochord import (build_complex, circle, classify_actions, make_spec,
                     regular_bimodule, tensor_square_bimodule, upper_tri,
                     validate_assignment, wedge_of_circles)

X = circle()
rep = classify_actions(X, 4)
print("circle action classes:")
for cls in rep.classes:
    sites = ", ".join(f"d_{i}{X.monotone_name(ref)}" for (_, ref, i) in cls.sites)
    print(f"  {cls.class_id}: {cls.action_type:5s}  sites {sites}")

alg = upper_tri(2)
mod = regular_bimodule(alg)
by_type = {c.action_type: c.class_id for c in rep.classes}
good = {by_type["left"]: "left", by_type["right"]: "right"}
bad = {by_type["left"]: "left", by_type["right"]: "left"}
print("\nassigning the bimodule actions (cochain side):")
print("  left->left, right->right:", validate_assignment(mod, rep, good) or "ok")
print("  right class to a left action:", validate_assignment(mod, rep, bad)[0])

# A wedge of two circles needs four commuting actions.  The regular bimodule
# cannot serve two circles at once, but A (x) A with multiplication on each
# factor can.
W = wedge_of_circles(2)
wrep = classify_actions(W, 3)
print(f"\nwedge of two circles has {len(wrep.classes)} classes:")
for cls in wrep.classes:
    print(f"  {cls.class_id}: {cls.action_type}")
big = tensor_square_bimodule(alg)
c = build_complex(make_spec(W, alg, big, "cochain", 2))
print("cochain complex over A(x)A built; d^2 = 0:", c.verify_square_zero())

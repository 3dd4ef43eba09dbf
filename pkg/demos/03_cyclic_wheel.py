"""The wheel picture: cyclic orderings of the circle and its wedges.

Every level of the circle sits on a wheel: the basepoint is the hub (it is
both the all-0s and the all-1s word) and the n monotone words follow each
other around.  Face maps squeeze neighbouring simplices together without
reordering anything, which is exactly why restricting these per-level orders
to fibers yields a consistent multiplication recipe.
"""

from hochord import (assignment_from_level_orders, check_nncmo, check_nncmo_full,
                     circle, cyclic_ordering, wedge_of_circles)

X = circle()
orders = cyclic_ordering(X, 5)
print("circle level tables:")
for n in range(1, 5):
    print(f"  X_{n}:", " < ".join(X.monotone_name(r) for r in orders[n]))

W = wedge_of_circles(2)
worders = cyclic_ordering(W, 4)
print("\nwedge of two circles (levels interleave edge by edge):")
for n in range(1, 4):
    print(f"  X_{n}:", " < ".join(W.monotone_name(r) for r in worders[n]))

# the derived fiber assignment passes the consistency check, including the
# brute-force variant over all factorizations, not just adjacent swaps
asg = assignment_from_level_orders(X, orders, 5)
print("\nadjacent-pair check:", "ok" if check_nncmo(X, asg, 5) is None else "violated")
print("all-factorization check:", "ok" if check_nncmo_full(X, asg, 5) is None else "violated")

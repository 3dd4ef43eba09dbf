"""The circle recovers classical Hochschild (co)homology.

The minimal pointed circle has one vertex and one edge; its level-n simplices
are the basepoint plus the n monotone words 0..01..1.  Feeding the circle to
the complex builder must therefore reproduce the textbook Hochschild complex
of a bimodule -- not just up to isomorphism, but as identical matrices.
"""

from hochord import (CHAIN, COCHAIN, build_complex, classical_complex,
                     make_spec, circle, regular_bimodule, trunc_poly, upper_tri)

for alg in (trunc_poly(2), upper_tri(2)):
    mod = regular_bimodule(alg)
    print(f"== {alg.describe()} ==")
    for variant in (CHAIN, COCHAIN):
        built = build_complex(make_spec(circle(), alg, mod, variant, 4))
        classic = classical_complex(alg, mod, variant, 4)
        agree = all(built.differentials[n] == classic.differentials[n]
                    for n in built.differentials)
        print(f"  {variant:8s} dims {built.dims}")
        print(f"           matrices equal the classical construction: {agree}")
        print(f"           betti {built.betti[:4]} (degree 4 is truncated)")
    print()

# The degree-0 groups have closed forms: cochain degree 0 is the center of A,
# chain degree 0 is A modulo the span of all commutators.
from hochord import center, commutator_span_dim

for alg in (trunc_poly(2), upper_tri(2)):
    mod = regular_bimodule(alg)
    co = build_complex(make_spec(circle(), alg, mod, COCHAIN, 2))
    ch = build_complex(make_spec(circle(), alg, mod, CHAIN, 2))
    print(f"{alg.name}: beta^0 = {co.betti[0]} (center has dim {len(center(alg))}), "
          f"beta_0 = {ch.betti[0]} (A/[A,A] has dim {alg.dim - commutator_span_dim(alg)})")

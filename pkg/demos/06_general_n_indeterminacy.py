"""Indeterminacy matters: the general-n bundle product.

Over a product of n 2-spheres, the displayed representative of
<a1, a1, a2*...*a_{n-1}> is a nonzero class for every n >= 3.  At n = 3 the
indeterminacy vanishes and the product is honestly nonzero; at n >= 4 the
indeterminacy subspace swallows the representative, so the strict verdict is
ZERO.  See ERRATA.md for the explicit membership witness.
"""

from fractions import Fraction

from cdgalab import cohomology, sphere_product_bundle, triple_massey

for n in (3, 4, 5):
    bundle = sphere_product_bundle(n)
    ring = cohomology(bundle.spec, 2 * n + 1, volume=bundle.volume)
    a1 = ring.class_of(bundle.classes["a1"])
    third = bundle.classes["a2"]
    for i in range(3, n):
        third = third * bundle.classes[f"a{i}"]
    rep = triple_massey(ring, a1, a1, ring.class_of(third))
    names = tuple(f"a{i}" for i in range(1, n)) + ("x",)
    alt = tuple(f"a{i}" for i in list(range(1, n - 1)) + [n]) + ("x",)
    displayed = bundle.spec.element([
        (Fraction(1, 2), names), (Fraction(-1, 2), alt)])
    print(f"n={n}: defined={rep.defined}  strict verdict={rep.verdict}  "
          f"indeterminacy dim={rep.indeterminacy_dimension}  "
          f"displayed class nonzero={not ring.class_of(displayed).is_zero()}")

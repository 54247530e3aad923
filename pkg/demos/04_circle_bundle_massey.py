"""Triple products on circle-bundle models.

Over a product of three 2-spheres with Euler class a1+a2+a3, the product
<a1, a1, a2> is defined (a1^2 = 0 and a1*a2 is exact), has no indeterminacy
because H^3 of the bundle vanishes, and is nonzero: the bundle is not formal.
The same computation runs over the sign-involution quotient of the 6-torus.
"""

from cdgalab import cohomology, invariant_cohomology, preset, triple_massey

bundle = preset("SASAKI7_S2CUBE")
ring = cohomology(bundle.spec, 7, volume=bundle.volume)
print("bundle Betti numbers:", ring.betti)
a1 = ring.class_of(bundle.classes["a1"])
a2 = ring.class_of(bundle.classes["a2"])
rep = triple_massey(ring, a1, a1, a2)
print("<a1,a1,a2> verdict:", rep.verdict)
print("representative:", rep.representative.rep_element().render())
print("primitive used:", rep.certificate["primitive_vw"])

quasi = preset("P_OVER_T6Z2")
qring = invariant_cohomology(quasi.action, 7, volume=quasi.volume)
print("\nquotient-bundle Betti numbers:", qring.betti)
qa1 = qring.class_of(qring.slices.from_element(quasi.classes["a1"]), 2)
qa2 = qring.class_of(qring.slices.from_element(quasi.classes["a2"]), 2)
qrep = triple_massey(qring, qa1, qa1, qa2)
print("<a1,a1,a2> verdict:", qrep.verdict)
print("representative:", qrep.representative.rep_element().render())

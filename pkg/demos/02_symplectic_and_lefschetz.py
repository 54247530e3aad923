"""A symplectic quotient with no compatible duality structure.

The 6-dimensional quotient carries a closed invariant 2-form with nonzero
top power, yet cup product with *any* degree-2 class fails to be an
isomorphism H^2 -> H^4: one class annihilates all of H^2.
"""

from cdgalab import invariant_cohomology, lefschetz_test, preset, universal_obstruction

bundle = preset("HEIS6_Z6")
omega = bundle.classes["omega"]
print("omega =", omega.render())
print("d(omega) = 0:", omega.d().is_zero())
cube = omega * omega * omega
print("omega^3 =", cube.render())
print("invariant under the action:", bundle.action.apply(omega) == omega)

ring = invariant_cohomology(bundle.action, 6, volume=bundle.volume)
report = lefschetz_test(ring, ring.class_of(ring.slices.from_element(omega), 2), 3)
print("\nhard Lefschetz for omega itself:")
for v in report.per_degree:
    print(f"  L^{v.power}: H^{v.degree} -> H^{6 - v.degree}:",
          "iso" if v.isomorphism else "NOT iso")
    for cls in v.kernel:
        print("      kernel class:", cls.rep_element().render())

witnesses = universal_obstruction(ring, 2, n=3)
print("\nclasses killed by every degree-2 class (universal witnesses):")
for cls in witnesses:
    print("   ", cls.rep_element().render())
print("=> no choice of symplectic class can satisfy hard Lefschetz here.")

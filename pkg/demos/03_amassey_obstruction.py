"""A secondary-product obstruction on the 8-dimensional quotient.

The quotient has H^3 = 0, so the order-3 a-product <a; b1, b2, b3> has no
indeterminacy; it evaluates to a nonzero multiple of the top class, which
obstructs formality.
"""

from cdgalab import a_massey, formality_verdict, invariant_cohomology, preset

bundle = preset("HEIS8_Z3")
ring = invariant_cohomology(bundle.action, 8, volume=bundle.volume)
print("quotient Betti numbers:", ring.betti)
print("H^3 vanishes:", ring.betti[3] == 0)

a = ring.class_of(ring.slices.from_element(bundle.classes["a"]), 2)
bs = [ring.class_of(ring.slices.from_element(bundle.classes[n]), 2)
      for n in ("b1", "b2", "b3")]
report = a_massey(ring, a, bs)
print("\n<a; b1, b2, b3> defined:", report.defined)
print("verdict:", report.verdict)
print("representative:", report.representative.rep_element().render())
print("integral against the volume (group order 3):",
      ring.integrate(report.representative))

verdict = formality_verdict(ring)
print("\nformality verdict:", verdict.verdict, "via", verdict.route)

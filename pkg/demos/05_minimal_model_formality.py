"""A bounded minimal model and a formality certificate.

The circle bundle over CP^3 x S^2 with Euler class a1+a2 has cohomology
concentrated in degrees 0, 2, 7, 9.  Its minimal model through degree 7 has
exactly three generators; the degreewise formality certificate plus duality
give FORMAL.
"""

from cdgalab import (
    build_minimal_model,
    cohomology,
    formality_verdict,
    preset,
    s_formality_check,
)

bundle = preset("SASAKI_CPN_S2", n=4)
ring = cohomology(bundle.spec, 8, volume=bundle.volume)
print("bundle Betti numbers:", ring.betti)

mm = build_minimal_model(ring, 7)
print("\nminimal model generators:")
for g in mm.model.generators:
    print(f"  {g.name} (degree {g.degree}), d = "
          f"{mm.model.gen(g.name).d().render()}")

for s in (3, 4):
    report = s_formality_check(mm, s)
    print(f"s-formality at s={s}: {report.status} via {report.route}")

verdict = formality_verdict(ring, poincare_dimension=9)
print("formality verdict:", verdict.verdict, "via", verdict.route)
print("certificate:", verdict.certificate)

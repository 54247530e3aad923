"""The scalar layer: exact arithmetic in Q(zeta_N).

Everything upstream (row reduction, Betti numbers, product verdicts) relies
on these scalars being exact: equality is decidable, conjugation is an
order-2 automorphism, and fields embed along divisibility of the modulus.
"""

from fractions import Fraction

from cdgalab import CycField

k6 = CycField.get(6)
z = k6.zeta()
print("zeta_6 =", z)
print("zeta_6^3 =", z * z * z, "(a primitive square root of unity)")
print("zeta_6 * zeta_6^5 =", z * k6.zeta(5))

k12 = CycField.get(12)
i = k12.zeta(3)
print("\nin Q(zeta_12): i = zeta_12^3, i^2 =", i * i)
print("conj(i) =", i.conj(), " i * conj(i) =", i * i.conj())

s = k6.zeta() + k6.rational(Fraction(1, 2))
print("\nembedding Q(zeta_6) -> Q(zeta_12):", s, "->", s.embed(12))
print("norm is rational:", (s * s.conj()).rational_value())

print("\ninverse of (2 + zeta_6):", (k6.rational(2) + z).inverse())
print("check:", (k6.rational(2) + z) * (k6.rational(2) + z).inverse())

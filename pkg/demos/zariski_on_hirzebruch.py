"""Zariski decompositions on the Hirzebruch surface F_2.

F_2 carries a (-2)-curve C0. Any divisor that meets C0 negatively has to
shed part of C0 before the rest becomes nef, and the amount it sheds is
usually fractional. The integral version rounds that down and then puts
back whole copies of C0 while the remainder still meets C0 positively.
"""
from divcalc import integral_zariski_decompose, make_hirzebruch, zariski_decompose

f2 = make_hirzebruch(2)
print(f"F_2: basis {f2.basis_names}, intersection matrix {f2.form.matrix}")

for coords in ([2, 1], [3, 1], [1, 2], [5, 2]):
    d = f2.divisor(coords)
    z = zariski_decompose(d, f2)
    iz = integral_zariski_decompose(d, f2)
    neg = ", ".join(f"{f2.curves[i].name}: {a}" for i, a in zip(z.support, z.coeffs)) or "none"
    print(f"\nD = {coords}, D^2 = {f2.square(d)}")
    print(f"  P = {[str(c) for c in z.positive.coords]}, P^2 = {f2.square(z.positive)}")
    print(f"  N = {neg}")
    print(f"  P_Z = {[str(c) for c in iz.positive.coords]}, N_Z coefficients {iz.coeffs}")

"""Reider-type obstructions and the correction constant C_S.

On P^2, 3H is very ample, yet the numerical Reider test sees only that
(3H)^2 = 9 is at the threshold: the exceptional case is reported rather
than a fake obstruction. On F_1 the class C0 + 3F is not ample, and the
fibre F shows up as the obstruction to base-point freeness.

In positive characteristic the correction constant depends on the
surface invariants, and the Miyaoka-Sakai multiple is the smallest m
with (mP)^2 > 4 C_S.
"""
from divcalc import (correction_constant, make_hirzebruch, make_projective_plane, make_shell,
                     ms_multiple, reider_check)

p2 = make_projective_plane()
report = reider_check(p2.divisor([3]), p2, level="very-ample")
print(f"P^2, 3H, very ample: obstructed={report.obstructed}, "
      f"exceptional case {report.exceptional_case.case_label if report.exceptional_case else None}")

f1 = make_hirzebruch(1)
report = reider_check(f1.divisor([1, 3]), f1)
for ob in report.obstructions:
    print(f"F_1, C0+3F: obstruction B = {[str(c) for c in ob.b.coords]} with DB = {ob.db}, B^2 = {ob.b_square}")

# a general-type shell in characteristic 3 with K^2 = 8 and chi(O) = 1
gt = make_shell("general_type", [[1, 0], [0, -1]], char_p=3, canonical=[3, -1],
                polarization=[1, 0], chi_O=1, volume=8)

for m in (p2, f1, gt):
    cs = correction_constant(m.invariants)
    print(f"{m.name}: C_S = {cs.value} ({cs.case_used})")

mult = ms_multiple(p2.divisor([1]), p2)
print(f"P^2, H: m = {mult.m}; margin {mult.margin}; previous multiple fails because {mult.previous_fails}")

mult = ms_multiple(gt.divisor([1, 0]), gt)
print(f"{gt.name}, H: m = {mult.m}; (mP)^2 - 4 C_S = {mult.margin}; {mult.previous_fails}")

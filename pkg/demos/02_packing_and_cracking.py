"""
Simulated packing and cracking
==============================

Flip exactly one district and move the displaced voters elsewhere.  The
first call reproduces the worked cracking example: the regression through
the four republican districts predicts 0.49 for the flipped district,
which is capped at 0.45, and the 0.15 of displaced share takes two rounds
of even spreading to place.
"""

from spcdecl import Beneficiary, Method, SpcRequest, Strategy, s_declination, spc, validate_distribution
from spcdecl.spc import SpcFailure

election = validate_distribution([0.37, 0.40, 0.43, 0.46, 0.60, 0.63, 0.66, 0.69, 0.72, 0.75])

out = spc(election, SpcRequest(Beneficiary.REP, Method.CRACK, threshold=0.45))
a, b = out.regression_line
print(f"flipped district {out.flipped_index + 1}: {out.flipped_from:.2f} -> {out.flipped_to:.2f}")
print(f"regression line {a:.3f} + {b:.3f} x predicts {out.predicted:.2f} (capped: {out.clamped})")
for i, (pool, amount, capped) in enumerate(out.steps, 1):
    print(f"  round {i}: spread {amount:.3f} over {pool} districts, {capped} hit the cap")
print("after:", [round(v, 2) for v in out.unsorted])

# All four variants, and how much the S-declination moves for each.
before = s_declination(election)
for ben in Beneficiary:
    for method in Method:
        for strategy in Strategy:
            req = SpcRequest(ben, method, strategy=strategy)
            try:
                res = spc(election, req)
            except SpcFailure as exc:
                print(f"{req.variant:10s} {strategy.value:6s} failed: {type(exc).__name__}")
                continue
            change = s_declination(res.result) - before
            print(f"{req.variant:10s} {strategy.value:6s} change in S-declination {change:+.3f}")

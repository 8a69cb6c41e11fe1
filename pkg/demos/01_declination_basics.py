"""
Declination of a single election
================================

Districts are sorted by democratic share and plotted at x = (i - 1/2)/N.
The declination compares the line from the losing districts' centroid F
to the point G = (k/N, 1/2) with the line from G to the winning
districts' centroid H.
"""

from spcdecl import declination_details, seat_split, state_seat_estimate, validate_distribution

# A 10-district state where Democrats win six seats by wide margins and
# lose four narrowly.
election = validate_distribution([0.37, 0.40, 0.43, 0.46, 0.60, 0.63, 0.66, 0.69, 0.72, 0.75])
print("seats (dem, rep):", seat_split(election))

res = declination_details(election)
print(f"F = ({res.f_point.x:.3f}, {res.f_point.y:.3f})")
print(f"G = ({res.g_point.x:.3f}, {res.g_point.y:.3f})")
print(f"H = ({res.h_point.x:.3f}, {res.h_point.y:.3f})")
print(f"declination   = {res.delta:+.4f}")
print(f"S-declination = {res.s_declination:+.3f} seats  (5 N delta / 12)")
print(f"rounded       = {state_seat_estimate(election):+d}")

# A distribution symmetric about one half has zero declination.
sym = validate_distribution([0.3, 0.4, 0.6, 0.7])
print(f"symmetric: {abs(declination_details(sym).delta):.1e}")

# Swapping the parties flips the sign.
print("reflected:", f"{declination_details(election.reflected()).delta:+.4f}")

"""
Does the S-declination count seats?
===================================

Apply every SPC variant to an ensemble of synthetic states and look at how
far the S-declination moves.  A seat flipped toward the Republicans should
move it by about +1, a seat flipped toward the Democrats by about -1.
"""

from spcdecl import declination_sweep
from spcdecl.spc import Strategy
from spcdecl.synthetic import synthetic_states

states = synthetic_states(200, seed=0)
report = declination_sweep(states)

print(f"{report.count()} cases, {report.count('OK')} successful")
for direction, s in report.summary.items():
    lo, hi = s.central_95_range
    line = s.ols_line
    print(f"pro-{direction}: n={s.count_ok:4d}  mean {s.mean:+.3f}  95% range [{lo:+.2f}, {hi:+.2f}]  "
          f"line {line.intercept:+.3f} {line.slope:+.4f} N (r2 {line.r_squared:.2f}, rmse {line.rmse:.2f})")

# Alternative thresholds and the greedy spreading rule.
for thresholds, strategies in [((0.40,), (Strategy.EVEN,)), ((0.49,), (Strategy.EVEN,)),
                               ((0.45,), (Strategy.GREEDY,))]:
    alt = declination_sweep(states, thresholds, strategies)
    r = alt.summary["rep"].central_95_range
    print(f"threshold {thresholds[0]:.2f} {strategies[0].value:6s}: pro-rep 95% [{r[0]:+.2f}, {r[1]:+.2f}]")

"""
The presidential-vote logistic model under SPC
===============================================

The logistic seat model sums win probabilities F(beta0 + beta1 p).  When a
district is cracked, its probability drops, but the districts receiving
the displaced voters gain some of it back, so the expected seat count
moves well under one seat.
"""

import numpy as np

from spcdecl import Link, load_coefficients, sensitivity_sweep
from spcdecl.analysis import median_abs_change
from spcdecl.model import YearCoefficients
from spcdecl.regress import fit_logistic
from spcdecl.synthetic import synthetic_states

states = synthetic_states(200, seed=0)
table = load_coefficients()

for link in Link:
    rep = sensitivity_sweep(states, {2012: table[2012]}, link)
    s = rep.summary
    print(f"{link.value:8s} link: median change pro-rep {s['rep'].median:+.3f}, "
          f"pro-dem {s['dem'].median:+.3f}, median |change| {median_abs_change(rep):.3f}")

# Noise between presidential and legislative vote weakens the model further.
leg = np.concatenate([[d.dem_share for d in r.districts] for r in states])
for sd in (0.05, 0.10, 0.20):
    pres = leg + np.random.default_rng(100).normal(0.0, sd, leg.size)
    fit = fit_logistic(pres, leg > 0.5)
    coeffs = {2012: YearCoefficients(2012, 0.0, 1.0, fit.beta0, fit.beta1)}
    med = median_abs_change(sensitivity_sweep(states, coeffs))
    print(f"noise sd {sd:.2f}: beta1 = {fit.beta1:6.2f}, median |change| = {med:.3f}")

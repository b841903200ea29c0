"""Gibbs overshoot of Fourier and Chebyshev step fits as N grows."""
import argparse

from chebkit.approx import cheb_coefficients, fourier_coefficients, gibbs_overshoot
from chebkit.targets import parse_target

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--target", default="preset:unit_step")
parser.add_argument("--ns", default="5,10,20,40,80")
args = parser.parse_args()

target = parse_target(args.target)
print("N,fourier_overshoot,chebyshev_overshoot")
for N in (int(v) for v in args.ns.split(",")):
    f = gibbs_overshoot(target, fourier_coefficients(target, N))
    c = gibbs_overshoot(target, cheb_coefficients(target, N))
    print(f"{N},{f:.6f},{c:.6f}")

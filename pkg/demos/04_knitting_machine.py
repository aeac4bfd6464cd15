"""Recovering a recombination machine from the links it produces.

Run:  python demos/04_knitting_machine.py
"""

from tanglekit import Fraction
from tanglekit.dna import Machine, observe, required_observations, solve, threshold

m = Machine.from_fraction(Fraction(-1, 3), 1)
print(m, "threshold", threshold(m))

for upto in range(1, 5):
    obs = observe(m, range(1, upto + 1))
    sol = solve(obs)
    print(f"K_1..K_{upto}: {', '.join(str(o.knot) for o in obs)}")
    print(f"  {sol.status}: {', '.join(str(x) for x in sol.machines)}")

# a machine the minimal observation count does not pin down
m = Machine(9, 1, 2)
N = required_observations(m)
for extra in range(3):
    sol = solve(observe(m, range(N + 1 + extra)))
    print(f"{m}, K_0..K_{N + extra}: {sol.status} {[str(x) for x in sol.machines]}")

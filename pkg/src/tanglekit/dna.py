"""Tangle model of site-specific recombination.

A machine with substrate fraction ``p/q`` and recombination tangle ``[r]``
emits the rational links ``K_n = N(S + n[r])``, i.e. ``N((p + qrn)/q)``.
:func:`solve` recovers every machine consistent with observed unoriented
link types.
"""

from __future__ import annotations

import fractions
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .classify import KnotClass, normalize_unoriented
from .fraction import Fraction

__all__ = [
    "Machine",
    "Observation",
    "Solution",
    "generate",
    "observe",
    "threshold",
    "required_observations",
    "solve",
    "parse_observations",
    "format_observations",
]


@dataclass(frozen=True, order=True)
class Machine:
    """``S`` with ``F(S) = p/q`` (``p > 0``, ``q`` signed) and ``R = [r]``."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.p <= 0:
            raise ValueError("substrate numerator p must be positive")
        if self.q == 0:
            raise ValueError("q = 0 would make the substrate [∞]; the sequence is constant")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")
        if self.r == 0:
            raise ValueError("r = 0 is not a recombination tangle")

    @classmethod
    def from_fraction(cls, f, r: int) -> "Machine":
        f = Fraction.coerce(f)
        if f.is_infinite or f.p == 0:
            raise ValueError(f"substrate fraction {f} is outside the model")
        sign = 1 if f.p > 0 else -1
        return cls(sign * f.p, sign * f.q, r)

    @property
    def substrate(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"S = {self.substrate}, r = {self.r}"


@dataclass(frozen=True)
class Observation:
    n: int
    knot: KnotClass


def generate(m: Machine, N: int) -> list[Fraction]:
    """Fractions of ``S + n[r]`` for ``n = 0..N``."""
    return [Fraction(m.p + m.q * m.r * n, m.q) for n in range(N + 1)]


def observe(m: Machine, indices: Iterable[int]) -> list[Observation]:
    return [Observation(n, normalize_unoriented(Fraction(m.p + m.q * m.r * n, m.q))) for n in indices]


def threshold(m: Machine) -> fractions.Fraction:
    """``|q| - p/(qr)``: observing ``K_0..K_N`` for ``N`` at least this much
    is claimed to determine the machine."""
    return abs(m.q) - fractions.Fraction(m.p, m.q * m.r)


def required_observations(m: Machine) -> int:
    """Smallest ``N`` used as "bound met": ``ceil(max(threshold, 1))``."""
    return math.ceil(max(threshold(m), 1))


@dataclass(frozen=True)
class Solution:
    machines: tuple[Machine, ...]
    status: str  # unique | ambiguous | inconsistent | exhausted
    complete: bool  # True when the enumeration provably covers all machines
    bound_met: tuple[bool, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "complete": self.complete,
            "machines": [
                {
                    "substrate": str(m.substrate),
                    "p": m.p,
                    "q": m.q,
                    "r": m.r,
                    "threshold": str(threshold(m)),
                    "bound_met": met,
                }
                for m, met in zip(self.machines, self.bound_met)
            ],
        }


def _reproduces(m: Machine, obs: Sequence[Observation]) -> bool:
    return all(normalize_unoriented(Fraction(m.p + m.q * m.r * o.n, m.q)) == o.knot for o in obs)


def _divisors(s: int) -> list[int]:
    s = abs(s)
    out = []
    for k in range(1, math.isqrt(s) + 1):
        if s % k == 0:
            out += [k, s // k]
    return sorted(set(out))


def _candidates_from_pair(o1: Observation, o2: Observation):
    """All ``(p, s)`` with ``|p + s n_i| = P_i`` for both observations."""
    dn = o2.n - o1.n
    for e1 in {1, -1} if o1.knot.p else {1}:
        for e2 in {1, -1} if o2.knot.p else {1}:
            diff = e2 * o2.knot.p - e1 * o1.knot.p
            if diff % dn:
                continue
            s = diff // dn
            p = e1 * o1.knot.p - s * o1.n
            if p > 0 and s != 0:
                yield p, s


def _machines_for(p: int, s: int):
    for k in _divisors(s):
        for q in (k, -k):
            if math.gcd(p, q) == 1:
                yield Machine(p, q, s // q)


def _bound_met(m: Machine, obs: Sequence[Observation]) -> bool:
    seen = {o.n for o in obs}
    return all(n in seen for n in range(required_observations(m) + 1))


def solve(
    obs: Sequence[Observation],
    *,
    pmax: int | None = None,
    qmax: int | None = None,
    rmax: int | None = None,
) -> Solution:
    """Every machine reproducing the observations.

    With observations at two or more indices the answer is exact: the two
    lowest indices leave at most four choices of ``(p, qr)``, and ``q`` must
    divide ``qr``.  A single observation leaves infinitely many machines; the
    search is then cut at ``pmax``/``qmax``/``rmax`` and flagged incomplete.
    """
    obs = sorted(obs, key=lambda o: o.n)
    if not obs:
        raise ValueError("no observations")
    if any(a.n == b.n for a, b in zip(obs, obs[1:])):
        raise ValueError("observation indices must be distinct")
    if obs[0].n < 0:
        raise ValueError("observation indices are nonnegative")

    found: set[Machine] = set()
    if len(obs) >= 2:
        complete = True
        for p, s in _candidates_from_pair(obs[0], obs[1]):
            for m in _machines_for(p, s):
                if _reproduces(m, obs):
                    found.add(m)
    else:
        complete = False
        o = obs[0]
        P = o.knot.p
        qmax = qmax if qmax is not None else max(P, 2)
        rmax = rmax if rmax is not None else 5
        pmax = pmax if pmax is not None else P + qmax * rmax * o.n
        for q in range(-qmax, qmax + 1):
            for r in range(-rmax, rmax + 1):
                if q == 0 or r == 0:
                    continue
                for e in {1, -1} if P else {1}:
                    p = e * P - q * r * o.n
                    if 0 < p <= pmax and math.gcd(p, q) == 1:
                        m = Machine(p, q, r)
                        if _reproduces(m, obs):
                            found.add(m)

    machines = tuple(sorted(found))
    if len(machines) == 1:
        status = "unique"
    elif machines:
        status = "ambiguous"
    else:
        status = "inconsistent" if complete else "exhausted"
    return Solution(machines, status, complete, tuple(_bound_met(m, obs) for m in machines))


def parse_observations(text: str) -> list[Observation]:
    """Lines ``n p qclass``, ``n unknot`` or ``n unlink2``; ``#`` comments."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        try:
            n = int(line[0])
            if line[1:] == ["unknot"]:
                k = KnotClass(1, 0)
            elif line[1:] == ["unlink2"]:
                k = KnotClass(0, 0)
            elif len(line) == 3:
                p, q = int(line[1]), int(line[2])
                if p < 2 or math.gcd(p, q) != 1:
                    raise ValueError
                k = normalize_unoriented(Fraction(p, q))
            else:
                raise ValueError
        except (ValueError, IndexError):
            raise ValueError(f"line {lineno}: expected 'n p qclass', 'n unknot' or 'n unlink2', got {raw.strip()!r}") from None
        out.append(Observation(n, k))
    return out


def format_observations(obs: Iterable[Observation]) -> str:
    lines = []
    for o in obs:
        if o.knot.p <= 1:
            lines.append(f"{o.n} {o.knot.kind}")
        else:
            lines.append(f"{o.n} {o.knot.p} {o.knot.qclass}")
    return "\n".join(lines) + "\n"

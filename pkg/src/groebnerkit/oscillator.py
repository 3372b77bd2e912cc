"""Closed-form underdamped mass-spring-damper motion.

For m*y'' + b*y' + k*y = 0 with 4mk - b^2 > 0 the motion is
A * exp(-b/(2m) * t) * sin(w*t + phi) with w = sqrt(4mk - b^2) / (2m);
the solution oscillates between the envelope curves +-A * exp(-b/(2m) * t).
Amplitude and phase come from the initial displacement and velocity.

The phase uses the two-argument arctangent of (C1, C2) so that
sin(phi) tracks C1 and cos(phi) tracks C2; a single-argument arctangent
of their ratio would lose the quadrant and break y(0) = y0 whenever
C2 < 0. The other damping regimes are rejected, not solved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

Real = Union[int, float, Fraction]

RELATIVE_EPSILON = 1e-12


@dataclass(frozen=True)
class OscillatorParams:
    """Mass (kg), spring constant (N/m), damping coefficient (N*s/m),
    initial displacement (m), initial velocity (m/s)."""

    m: Real
    k: Real
    b: Real
    y0: Real
    y1: Real

    def __post_init__(self):
        if self.m <= 0:
            raise ValueError("mass must be positive")
        if self.k <= 0:
            raise ValueError("spring constant must be positive")
        if self.b < 0:
            raise ValueError("damping coefficient must be nonnegative")


@dataclass(frozen=True)
class OscillatorSolution:
    omega: float
    beta: float
    amplitude: float
    phase: float
    c1: float
    c2: float


class Evaluation(NamedTuple):
    y: float
    env_hi: float
    env_lo: float


class Sample(NamedTuple):
    t: float
    y: float
    env_hi: float
    env_lo: float


def _is_exact(value: Real) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def classify(m: Real, k: Real, b: Real) -> str:
    """Damping regime: "underdamped", "critical", or "overdamped".

    Rational inputs are compared exactly; floats within a relative
    epsilon of the critical line count as critical.
    """
    if m <= 0 or k <= 0:
        raise ValueError("mass and spring constant must be positive")
    if b < 0:
        raise ValueError("damping coefficient must be nonnegative")
    if _is_exact(m) and _is_exact(k) and _is_exact(b):
        discriminant = 4 * Fraction(m) * Fraction(k) - Fraction(b) ** 2
        if discriminant > 0:
            return "underdamped"
        return "critical" if discriminant == 0 else "overdamped"
    fm, fk, fb = float(m), float(k), float(b)
    discriminant = 4 * fm * fk - fb * fb
    scale = max(4 * fm * fk, fb * fb)
    if abs(discriminant) <= RELATIVE_EPSILON * scale:
        return "critical"
    return "underdamped" if discriminant > 0 else "overdamped"


def solve_ivp(params: OscillatorParams) -> OscillatorSolution:
    """Amplitude-phase solution matching y(0) = y0 and y'(0) = y1."""
    if classify(params.m, params.k, params.b) != "underdamped":
        raise ValueError("underdamped regime required (4mk - b^2 <= 0)")
    m = float(params.m)
    k = float(params.k)
    b = float(params.b)
    y0 = float(params.y0)
    y1 = float(params.y1)

    omega = math.sqrt(4 * m * k - b * b) / (2 * m)
    beta = -b / (2 * m)
    c1 = y0
    c2 = (y1 - beta * y0) / omega
    amplitude = math.hypot(c1, c2)
    phase = math.atan2(c1, c2) if amplitude > 0 else 0.0
    return OscillatorSolution(
        omega=omega, beta=beta, amplitude=amplitude, phase=phase, c1=c1, c2=c2
    )


def evaluate(sol: OscillatorSolution, t: float) -> Evaluation:
    """Displacement and both envelope values at time t."""
    envelope = sol.amplitude * math.exp(sol.beta * t)
    y = envelope * math.sin(sol.omega * t + sol.phase)
    return Evaluation(y=y, env_hi=envelope, env_lo=-envelope)


def sample(sol: OscillatorSolution, t_end: float, n: int) -> list[Sample]:
    """n uniformly spaced samples on [0, t_end], endpoints included."""
    if t_end <= 0:
        raise ValueError("t_end must be positive")
    if not isinstance(n, int) or n < 2:
        raise ValueError("n must be an integer >= 2")
    rows = []
    for j in range(n):
        t = t_end * j / (n - 1)
        rows.append(Sample(t, *evaluate(sol, t)))
    return rows

"""Consumers of Groebner bases.

Ideal membership via normal forms, elimination ideals read off a lex
basis, the two-variable staircase picture of a leading-term monomial
ideal, and a bisection root finder for the univariate polynomials that
elimination produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groebner import GroebnerBasis, normal_form
from .order import MonomialOrder, leading_monomial
from .ring import Polynomial, RingMismatchError


def is_member(f: Polynomial, basis: GroebnerBasis) -> bool:
    """Whether f lies in the ideal the basis generates.

    Sound and complete because the basis is a Groebner basis: membership
    is exactly a zero normal form.
    """
    if f.context != basis.context:
        raise RingMismatchError("ring mismatch")
    return normal_form(f, list(basis.generators), basis.order).is_zero()


def eliminate(basis: GroebnerBasis, keep_count: int) -> list[Polynomial]:
    """Generators involving only the last keep_count variables.

    For a lex basis this subset is itself a Groebner basis of the
    elimination ideal, which is why lex is required here.
    """
    if basis.order is not MonomialOrder.LEX:
        raise ValueError("elimination requires lex")
    nvars = len(basis.context)
    if not 1 <= keep_count <= nvars:
        raise ValueError(f"keep_count must be between 1 and {nvars}")
    drop = nvars - keep_count
    kept = []
    for g in basis.generators:
        if all(not any(m[:drop]) for m in g.terms):
            kept.append(g)
    return kept


@dataclass(frozen=True)
class StaircaseDiagram:
    """Minimal generators of a 2-variable monomial ideal, plus extents.

    A lattice point (u, v) lies inside the ideal exactly when some
    generator (a, b) has a <= u and b <= v. Generators are pairwise
    incomparable under componentwise <=.
    """

    minimal_generators: tuple[tuple[int, int], ...]
    width: int
    height: int

    def contains(self, u: int, v: int) -> bool:
        return any(a <= u and b <= v for a, b in self.minimal_generators)


def staircase(basis: GroebnerBasis) -> StaircaseDiagram:
    """Staircase of the leading-term ideal of a 2-variable basis."""
    if len(basis.context) != 2:
        raise ValueError("staircase supports 2 variables")
    points = {tuple(leading_monomial(g, basis.order)) for g in basis.generators}
    minimal = [
        p
        for p in points
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in points)
    ]
    minimal.sort()
    width = max(a for a, _ in minimal) + 2
    height = max(b for _, b in minimal) + 2
    return StaircaseDiagram(tuple(minimal), width, height)


def univariate_real_roots(
    p: Polynomial, tol: float, *, grid_steps: int = 1024
) -> list[float]:
    """All real roots of a univariate polynomial, ascending.

    Roots are found by scanning a uniform grid over the Cauchy bound
    interval for exact zeros and sign changes, then bisecting each
    bracket down to tol. The grid is evaluated in exact rational
    arithmetic, so a root sitting exactly on a grid point (in particular
    0) is always caught, even at even multiplicity. Even-multiplicity
    roots strictly between grid points have no sign change and can be
    missed. Roots closer than tol merge, reporting the midpoint.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p.is_zero():
        raise ValueError("identically zero")
    active = {i for m in p.terms for i, e in enumerate(m) if e}
    if len(active) > 1:
        raise ValueError("not univariate")
    if not active:
        return []  # nonzero constant
    var = active.pop()

    degree = max(m[var] for m in p.terms)
    coeffs = [Fraction(0)] * (degree + 1)
    for m, c in p.terms.items():
        coeffs[m[var]] = c

    def evaluate(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    lead = coeffs[-1]
    bound = 1 + max((abs(c / lead) for c in coeffs[:-1]), default=Fraction(0))

    xs = [bound * Fraction(2 * j - grid_steps, grid_steps) for j in range(grid_steps + 1)]
    values = [evaluate(x) for x in xs]

    found: list[Fraction] = []
    for x, v in zip(xs, values):
        if v == 0:
            found.append(x)
    width_target = Fraction(tol)
    for j in range(grid_steps):
        va, vb = values[j], values[j + 1]
        if (va < 0 < vb) or (vb < 0 < va):
            a, b = xs[j], xs[j + 1]
            while b - a >= width_target:
                mid = (a + b) / 2
                vm = evaluate(mid)
                if vm == 0:
                    a = b = mid
                    break
                if (vm < 0) == (va < 0):
                    a = mid
                else:
                    b = mid
            found.append((a + b) / 2)

    found.sort()
    merged: list[float] = []
    cluster: list[Fraction] = []
    for root in found:
        if cluster and float(root - cluster[0]) > tol:
            merged.append(float((cluster[0] + cluster[-1]) / 2))
            cluster = []
        cluster.append(root)
    if cluster:
        merged.append(float((cluster[0] + cluster[-1]) / 2))
    return merged

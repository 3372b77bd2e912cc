"""Exact-arithmetic Groebner basis toolkit.

Multivariate polynomials over arbitrary-precision rationals, the three
classical monomial orders, multivariate division, Buchberger completion
and reduced bases, plus two applications: planar two-link inverse
kinematics by lex elimination and the closed-form underdamped
mass-spring-damper solution.
"""

from .division import DivisionResult, divide
from .groebner import (
    GroebnerBasis,
    buchberger,
    groebner_basis,
    normal_form,
    reduce_basis,
    s_polynomial,
)
from .ideal import (
    StaircaseDiagram,
    eliminate,
    is_member,
    staircase,
    univariate_real_roots,
)
from .kinematics import ArmSpec, IKResult, JointSolution, Target, ik_solve, ik_system
from .order import GREVLEX, GRLEX, LEX, MonomialOrder, leading_term
from .oscillator import OscillatorParams, OscillatorSolution, classify, solve_ivp
from .parse import ParseError, format_polynomial, parse_polynomial, parse_system
from .ring import (
    Monomial,
    Polynomial,
    Rational,
    RingMismatchError,
    Term,
    VariableContext,
    rat_normalize,
)

__all__ = [
    "ArmSpec",
    "DivisionResult",
    "GREVLEX",
    "GRLEX",
    "GroebnerBasis",
    "IKResult",
    "JointSolution",
    "LEX",
    "Monomial",
    "MonomialOrder",
    "OscillatorParams",
    "OscillatorSolution",
    "ParseError",
    "Polynomial",
    "Rational",
    "RingMismatchError",
    "StaircaseDiagram",
    "Target",
    "Term",
    "VariableContext",
    "buchberger",
    "classify",
    "divide",
    "eliminate",
    "format_polynomial",
    "groebner_basis",
    "ik_solve",
    "ik_system",
    "is_member",
    "leading_term",
    "normal_form",
    "parse_polynomial",
    "parse_system",
    "rat_normalize",
    "reduce_basis",
    "s_polynomial",
    "solve_ivp",
    "staircase",
    "univariate_real_roots",
]

__version__ = "0.1.0"

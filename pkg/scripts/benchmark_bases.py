#!/usr/bin/env python3
"""Time reduced-basis computation on standard benchmark systems.

Usage: python3 scripts/benchmark_bases.py [--order grevlex]
"""

import argparse
import time

from groebnerkit.groebner import groebner_basis
from groebnerkit.order import MonomialOrder
from groebnerkit.parse import parse_system
from groebnerkit.ring import VariableContext

SYSTEMS = {
    "worked-2var": (
        ["x", "y"],
        ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"],
    ),
    "circle-diagonal": (
        ["x", "y"],
        ["x^2 + y^2 - 1", "x - y"],
    ),
    "cyclic-4": (
        ["a", "b", "c", "d"],
        [
            "a + b + c + d",
            "a*b + b*c + c*d + d*a",
            "a*b*c + b*c*d + c*d*a + d*a*b",
            "a*b*c*d - 1",
        ],
    ),
    "katsura-4": (
        ["u0", "u1", "u2", "u3", "u4"],
        [
            "u0 + 2*u1 + 2*u2 + 2*u3 + 2*u4 - 1",
            "u0^2 + 2*u1^2 + 2*u2^2 + 2*u3^2 + 2*u4^2 - u0",
            "2*u0*u1 + 2*u1*u2 + 2*u2*u3 + 2*u3*u4 - u1",
            "u1^2 + 2*u0*u2 + 2*u1*u3 + 2*u2*u4 - u2",
            "2*u1*u2 + 2*u0*u3 + 2*u1*u4 - u3",
        ],
    ),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", choices=["lex", "grlex", "grevlex"],
                        default="grevlex")
    args = parser.parse_args()
    order = MonomialOrder(args.order)

    for name, (variables, texts) in SYSTEMS.items():
        ctx = VariableContext(variables)
        polys = parse_system(texts, ctx)
        start = time.perf_counter()
        basis = groebner_basis(polys, order)
        elapsed = time.perf_counter() - start
        print(f"{name:>16}: {elapsed * 1000:8.1f} ms  "
              f"{len(basis.generators):3d} generators  ({order.value})")


if __name__ == "__main__":
    main()

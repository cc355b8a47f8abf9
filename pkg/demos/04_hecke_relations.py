"""The deformed group algebra on the Weyl basis.

One basis element per Weyl group element, with the one-letter rule
  e_s e_w = e_{sw}                    if the length goes up,
  e_s e_w = (q-1) e_w + q e_{sw}      if it goes down.
The quadratic relation, the braid relations, and the sign character all
follow and are checked here at several parameters, including a
non-integer one, since the construction is linear over the rationals.
"""

from fractions import Fraction

from weylbuildings import (
    affine_diagram,
    basis_element,
    multiply,
    special_character,
    unit,
)


def main() -> None:
    d = affine_diagram("A2~")
    for q in (Fraction(2), Fraction(7, 2)):
        one = unit(d, q)
        e0 = basis_element(d, [0], q)
        e1 = basis_element(d, [1], q)
        print(f"q = {q}")
        square = multiply(e0, e0)
        print(f"  e_0 e_0 == (q-1) e_0 + q:  {square == (q - 1) * e0 + q * one}")
        lhs = multiply(multiply(e0, e1), e0)
        rhs = multiply(multiply(e1, e0), e1)
        print(f"  e_0 e_1 e_0 == e_1 e_0 e_1: {lhs == rhs}")
        print(f"  chi(e_0) = {special_character(e0)}, "
              f"chi(e_0 e_1) = {special_character(multiply(e0, e1))}")
        descent = multiply(e0, basis_element(d, [0, 1], q))
        print(f"  a descent product e_0 e_01 expands to {len(descent.terms)} terms")
        print()


if __name__ == "__main__":
    main()

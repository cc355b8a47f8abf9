"""Growth of affine Weyl groups: enumeration against the closed form.

Each affine type determines an infinite Coxeter group.  Counting elements
by word length with a breadth-first search over the exact reflection
representation gives the growth table N(0), N(1), ...; the same numbers
fall out of a finite product of rational functions built from the
exponents of the finite Weyl group.  This script does both and compares.
"""

from fractions import Fraction

from weylbuildings import (
    affine_diagram,
    bfs_growth,
    bott_rational,
    expand,
    exponents_for,
    parse_type_label,
)


def main() -> None:
    for name in ("A1~", "A2~", "A3~", "C2~", "G2~"):
        label = parse_type_label(name)
        counts = bfs_growth(affine_diagram(label), 10).counts
        series = bott_rational(exponents_for(label))
        coeffs = expand(series, 10).coefficients
        agree = all(Fraction(c) == x for c, x in zip(counts, coeffs))
        print(f"type {name}")
        print(f"  exponents       {exponents_for(label).exponents}")
        print(f"  enumerated      {list(counts)}")
        print(f"  closed form     {[int(x) for x in coeffs]}")
        print(f"  numerator       {series.numerator}")
        print(f"  denominator     {series.denominator}")
        print(f"  agree           {agree}")
        print()


if __name__ == "__main__":
    main()

"""Exact rational series: expansion, evaluation, poles, and tail bounds.

The growth series of an affine Weyl group is a rational function with
integer coefficients.  Everything here is exact: expansion happens by the
long-division recurrence over Fractions, evaluation by Horner's rule, and
the tail bound is itself a closed-form rational number, so a truncated
alternating sum comes with a certificate.
"""

from fractions import Fraction

from weylbuildings import (
    PoleError,
    absolute_tail,
    bott_rational,
    evaluate,
    expand,
    exponents_for,
    parse_type_label,
)


def main() -> None:
    label = parse_type_label("A2~")
    series = bott_rational(exponents_for(label))
    print(f"series for {label}: numerator {series.numerator}, denominator {series.denominator}")

    coeffs = expand(series, 12).coefficients
    print(f"first coefficients: {[int(c) for c in coeffs]}")

    for q in (2, 3, 4):
        x = Fraction(-1, q)
        print(f"value at -1/{q}: {evaluate(series, x)}")

    try:
        evaluate(series, Fraction(1))
    except PoleError as exc:
        print(f"at X = 1 the denominator vanishes: {exc}")

    q = 2
    table = exponents_for(label)
    closed = evaluate(series, Fraction(-1, q))
    partial = Fraction(0)
    print(f"\ntruncations against the closed value {closed}:")
    for k in range(9):
        partial += coeffs[k] * Fraction(-1, q) ** k
        tail = absolute_tail(table, q, k)
        print(f"  K={k}: S_K = {str(partial):>8}  |S_K - closed| = {str(abs(partial - closed)):>8}  tail bound = {tail}")


if __name__ == "__main__":
    main()

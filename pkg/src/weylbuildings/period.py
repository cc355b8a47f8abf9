"""The alternating chamber-sum period of the sign-decaying vector.

Summing the cochain C -> (-1/q_E)^d(C_0, C) with q_E = q_F^2 over all
chambers, shell by shell, gives the series

    S = sum_k N(k) q_F^k (-1/q_F^2)^k = sum_k N(k) (-1/q_F)^k,

where N(k) counts affine Weyl elements of length k and q_F^k is the
number of chambers per element in the shell.  The closed form of the
growth series therefore evaluates the full sum: the period equals
P(-1/q_F), which is nonzero since -1/q_F lies inside (-1, 1).

Three independent routes are implemented and compared in tests:
``lambda_partial`` (enumerated growth counts, exact partial sums),
``lambda_closed`` (rational-function evaluation), and
``geometric_lambda`` (a literal sum of (-1/q_E)^distance over an
enumerated ball of the building, no Weyl theory involved).  The exact
tail bound P(1/q_F) - sum_{k<=K} N(k) q_F^{-k} certifies convergence:
|S_K - closed form| never exceeds it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .building import BallGraph, PrimeContext, ball
from .coxeter import AffineTypeLabel, affine_diagram, bfs_growth, parse_type_label
from .poincare import absolute_tail, bott_rational, evaluate, exponents_for

__all__ = [
    "lambda_partial",
    "lambda_closed",
    "absolute_majorant",
    "geometric_lambda",
    "geometric_shell_terms",
    "PeriodReport",
    "make_report",
    "report_to_json",
]


def _as_label(label: AffineTypeLabel | str) -> AffineTypeLabel:
    return parse_type_label(label) if isinstance(label, str) else label


def _require_q(q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise ValueError("the residue cardinality q must be an integer >= 2")


def lambda_partial(label: AffineTypeLabel | str, q: int, cutoff: int) -> list[Fraction]:
    """Exact partial sums S_0..S_K of sum_k N(k) (-1/q)^k.

    N comes from the breadth-first growth table, so this route is
    independent of the closed-form series.
    """
    _require_q(q)
    label = _as_label(label)
    counts = bfs_growth(affine_diagram(label), cutoff).counts
    x = Fraction(-1, q)
    sums: list[Fraction] = []
    total = Fraction(0)
    for k, n_k in enumerate(counts):
        total += n_k * x**k
        sums.append(total)
    return sums


def lambda_closed(label: AffineTypeLabel | str, q: int) -> Fraction:
    """Closed form of the period: the growth series evaluated at -1/q."""
    _require_q(q)
    label = _as_label(label)
    return evaluate(bott_rational(exponents_for(label)), Fraction(-1, q))


def absolute_majorant(label: AffineTypeLabel | str, q: int) -> Fraction:
    """P(1/q): exact upper bound for the summed absolute values."""
    _require_q(q)
    label = _as_label(label)
    return evaluate(bott_rational(exponents_for(label)), Fraction(1, q))


def geometric_shell_terms(graph: BallGraph) -> list[Fraction]:
    """Shell-by-shell contributions sum_{d(C)=k} (-1/p^2)^k on a ball.

    Purely geometric: only enumerated chambers and their distances enter.
    """
    p = graph.ctx.p
    x = Fraction(-1, p * p)
    sizes = graph.shell_sizes()
    return [sizes[k] * x**k for k in range(len(sizes))]


def geometric_lambda(
    ctx: PrimeContext, radius: int, graph: BallGraph | None = None
) -> Fraction:
    """Partial period by literal summation over an enumerated ball."""
    if graph is None:
        graph = ball(ctx, radius)
    elif graph.ctx != ctx or graph.radius < radius:
        raise ValueError("supplied ball does not cover the requested radius")
    x = Fraction(-1, ctx.p * ctx.p)
    total = Fraction(0)
    for d in graph.distance:
        if d <= radius:
            total += x**d
    return total


@dataclass(frozen=True)
class PeriodReport:
    """Everything the period computation produces, exactly.

    Invariant: |partial_sums[-1] - closed_form| <= tail_bound, and
    q_e = q_f^2 (the decay parameter lives over the quadratic extension).
    """

    label: AffineTypeLabel
    q_f: int
    q_e: int
    cutoff: int
    partial_sums: tuple[Fraction, ...]
    closed_form: Fraction
    tail_bound: Fraction
    majorant: Fraction

    def __post_init__(self) -> None:
        if self.q_e != self.q_f**2:
            raise ValueError("q_e must be the square of q_f")
        if len(self.partial_sums) != self.cutoff + 1:
            raise ValueError("partial sums must cover 0..cutoff")
        if abs(self.partial_sums[-1] - self.closed_form) > self.tail_bound:
            raise ValueError("tail bound fails to certify the truncation")


def make_report(label: AffineTypeLabel | str, q: int, cutoff: int) -> PeriodReport:
    """Assemble partial sums, closed form, tail bound and majorant."""
    _require_q(q)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    label = _as_label(label)
    sums = lambda_partial(label, q, cutoff)
    return PeriodReport(
        label=label,
        q_f=q,
        q_e=q * q,
        cutoff=cutoff,
        partial_sums=tuple(sums),
        closed_form=lambda_closed(label, q),
        tail_bound=absolute_tail(exponents_for(label), q, cutoff),
        majorant=absolute_majorant(label, q),
    )


def _frac_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def report_to_json(report: PeriodReport) -> dict:
    return {
        "type": str(report.label),
        "qF": report.q_f,
        "qE": report.q_e,
        "K": report.cutoff,
        "partialSums": [_frac_json(s) for s in report.partial_sums],
        "closedForm": _frac_json(report.closed_form),
        "tailBound": _frac_json(report.tail_bound),
        "majorant": _frac_json(report.majorant),
    }

"""Closed-form ranks: Moebius, Witt, L_q(P_m), and the Brunnian ranks.

All arithmetic is exact integer arithmetic.  Divisions assert exactness.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple


class FormulaViolation(ArithmeticError):
    """An identity that must hold exactly did not; indicates a bug."""


def mobius(d: int) -> int:
    if d < 1:
        raise ValueError("mobius is defined for d >= 1")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    if d > 1:
        result = -result
    return result


def divisors(q: int):
    return [d for d in range(1, q + 1) if q % d == 0]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def witt_rank(q: int, k: int) -> int:
    """Rank of the degree-q part of the free Lie ring on k generators."""
    if q < 1 or k < 0:
        raise ValueError("need q >= 1 and k >= 0")
    s = sum(mobius(d) * k ** (q // d) for d in divisors(q))
    if s % q:
        raise FormulaViolation(f"Witt sum {s} not divisible by {q}")
    return s // q


def rank_pure(q: int, m: int) -> int:
    """rank L_q(P_m) = sum of Witt ranks over the free layers."""
    if q < 1 or m < 1:
        raise ValueError("need q >= 1 and m >= 1")
    return sum(witt_rank(q, k) for k in range(1, m))


def rank_brunnian(q: int, n: int) -> int:
    if q < 1 or n < 1:
        raise ValueError("need q >= 1 and n >= 1")
    r = sum((-1) ** k * binomial(n, k) * rank_pure(q, n - k) for k in range(n))
    if r < 0:
        raise FormulaViolation(f"formula violation: rank_brunnian({q},{n}) = {r} < 0")
    return r


def witt_inversion(g: Mapping[int, int], deg_max: int) -> Dict[int, int]:
    """Ranks of the free Lie ring on a graded generator set.

    Finds l_q >= 0 with prod_q (1 - t^q)^{l_q} = 1 - sum_d g_d t^d modulo
    t^{deg_max+1}, matching coefficients degree by degree.
    """
    for d, c in g.items():
        if d < 1 or c < 0:
            raise ValueError("generator counts must be nonnegative, in degrees >= 1")
    # prod = prod_{q < N} (1 - t^q)^{l_q}, truncated
    prod = [1] + [0] * deg_max
    ranks: Dict[int, int] = {}
    for N in range(1, deg_max + 1):
        l = prod[N] + g.get(N, 0)
        if l < 0:
            raise FormulaViolation("not a free-generator series")
        ranks[N] = l
        if l:
            factor = [0] * (deg_max + 1)
            for j in range(0, deg_max // N + 1):
                factor[N * j] = (-1) ** j * binomial(l, j)
            prod = [sum(prod[a] * factor[s - a] for a in range(s + 1)) for s in range(deg_max + 1)]
    return ranks


@dataclass(frozen=True)
class RankTable:
    n: int
    q_max: int
    pure_ranks: Mapping[Tuple[int, int], int]
    brunnian_ranks: Mapping[int, int]
    # Brunnian ranks for every strand count m <= n, keyed by (q, m)
    brunnian_all: Mapping[Tuple[int, int], int] = field(repr=False)

    def rows(self):
        return [(q, self.pure_ranks[q, self.n], self.brunnian_ranks[q]) for q in range(1, self.q_max + 1)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["q", f"rank L_q(P_{self.n})", f"rank L_q^P(Brun_{self.n})"])
        w.writerows(self.rows())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "q_max": self.q_max,
            "rows": [{"q": q, "pure": p, "brunnian": b} for q, p, b in self.rows()],
        }, indent=2)

    def to_text(self) -> str:
        lines = [f"{'q':>3}  {'L_q(P_' + str(self.n) + ')':>12}  {'L_q^P(Brun_' + str(self.n) + ')':>16}"]
        for q, p, b in self.rows():
            lines.append(f"{q:>3}  {p:>12}  {b:>16}")
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        lines = [
            r"\begin{tabular}{|c|c|c|}",
            r"\hline",
            rf"$q$ & $\mathrm{{rank}}\,L_q(P_{{{self.n}}})$ & "
            rf"$\mathrm{{rank}}\,L^P_q(\mathrm{{Brun}}_{{{self.n}}})$ \\",
            r"\hline",
        ]
        for q, p, b in self.rows():
            lines.append(rf"{q} & {p} & {b} \\")
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines) + "\n"


def rank_table(n: int, q_max: int) -> RankTable:
    if n < 2 or q_max < 1:
        raise ValueError("need n >= 2 and q_max >= 1")
    pure = {(q, m): rank_pure(q, m) for q in range(1, q_max + 1) for m in range(1, n + 1)}
    brun = {(q, m): rank_brunnian(q, m) for q in range(1, q_max + 1) for m in range(1, n + 1)}
    for q in range(1, q_max + 1):
        for m in range(1, n + 1):
            total = sum(binomial(m, k) * brun[q, m - k] for k in range(m))
            if total != pure[q, m]:
                raise FormulaViolation(f"convolution identity fails at q={q}, m={m}")
    return RankTable(n, q_max, pure, {q: brun[q, n] for q in range(1, q_max + 1)}, brun)

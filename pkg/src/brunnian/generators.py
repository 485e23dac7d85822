"""Generator sets for the Brunnian Lie ideal and its kernel-intersection steps.

Monomials are bracket trees over the symbols A[1,n] .. A[n-1,n]; all
enumerations are truncated at an explicit degree and returned in the
canonical order (degree, text).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .free_lie import (
    LieMonomial,
    _bracketing,
    lyndon_words_int,
    monomial_contains,
    monomial_degree,
    monomial_letters,
    monomial_text,
    monomial_to_json,
)
from .kohno import face, monomial_to_layered, layer_alphabet


def _leaf(i: int, n: int) -> str:
    return f"A[{i},{n}]"


def canonical_order(monomials: Iterable[LieMonomial]) -> Tuple[LieMonomial, ...]:
    unique = {monomial_text(m): m for m in monomials}
    return tuple(sorted(unique.values(), key=lambda m: (monomial_degree(m), monomial_text(m))))


def _left_normed_closure(heads: Sequence[LieMonomial], tails: Sequence[LieMonomial],
                         deg_max: int) -> List[LieMonomial]:
    """heads plus every [...[[h, t1], t2], ..., tk] with ordered t's, degree <= deg_max."""
    out = [h for h in heads if monomial_degree(h) <= deg_max]
    frontier = list(out)
    tails = [t for t in tails if monomial_degree(t) < deg_max]
    while frontier:
        nxt = []
        for h in frontier:
            dh = monomial_degree(h)
            for t in tails:
                if dh + monomial_degree(t) <= deg_max:
                    nxt.append((h, t))
        out.extend(nxt)
        frontier = nxt
    return out


@dataclass(frozen=True)
class GeneratorSetLevel:
    n: int
    k: int
    deg_max: int
    monomials: Tuple[LieMonomial, ...]

    def lines(self) -> List[str]:
        return [f"{monomial_degree(m)} {monomial_text(m)}" for m in self.monomials]

    def to_json(self) -> str:
        return json.dumps([monomial_to_json(m) for m in self.monomials])


def _check_nk(n: int, k: int, deg_max: int) -> None:
    if n < 2:
        raise ValueError("need n >= 2")
    if not 1 <= k <= n:
        raise ValueError(f"level k={k} out of range 1..{n}")
    if deg_max < 1:
        raise ValueError("deg_max must be at least 1")


def kset(n: int, k: int, deg_max: int) -> GeneratorSetLevel:
    """The level-k generator set, built downward from level n.

    At each step the previous level splits into the monomials avoiding
    A[k,n] (the tails) and the rest (the heads); the new level is every head
    followed by any ordered sequence of tails, left-normed.
    """
    _check_nk(n, k, deg_max)
    level = canonical_order(_leaf(i, n) for i in range(1, n))
    for j in range(n - 1, k - 1, -1):
        letter = _leaf(j, n)
        tails = [m for m in level if not monomial_contains(m, letter)]
        heads = [m for m in level if monomial_contains(m, letter)]
        level = canonical_order(_left_normed_closure(heads, tails, deg_max))
    return GeneratorSetLevel(n, k, deg_max, level)


def kset_counts(n: int, deg_max: int) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for m in kset(n, 1, deg_max).monomials:
        d = monomial_degree(m)
        counts[d] = counts.get(d, 0) + 1
    return dict(sorted(counts.items()))


def lemma4_generators(X: Sequence[LieMonomial], Y: Sequence[LieMonomial],
                      deg_max: int) -> Tuple[LieMonomial, ...]:
    """x and [...[x, y1], ..., yt] for x in X, y_i in Y (ordered, repeats allowed)."""
    if deg_max < 1:
        raise ValueError("deg_max must be at least 1")
    if set(map(monomial_text, X)) & set(map(monomial_text, Y)):
        raise ValueError("X and Y must be disjoint")
    return canonical_order(_left_normed_closure(list(X), list(Y), deg_max))


def _check_pair(n: int, k: int, deg_max: int) -> None:
    if n < 2:
        raise ValueError("need n >= 2")
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 1..{n - 1}")
    if deg_max < 1:
        raise ValueError("deg_max must be at least 1")


def prop5_generators(n: int, k: int, deg_max: int) -> Tuple[LieMonomial, ...]:
    """Free generators of ker d_n ∩ ker d_k: A[k,n] bracketed on the right by other letters."""
    _check_pair(n, k, deg_max)
    others = [_leaf(j, n) for j in range(1, n) if j != k]
    return lemma4_generators([_leaf(k, n)], others, deg_max)


def prop6_generators(n: int, k: int, deg_max: int) -> Tuple[LieMonomial, ...]:
    """Lyndon basis monomials in which A[k,n] occurs exactly once.

    The Lyndon basis stands in for the Hall basis here.
    """
    _check_pair(n, k, deg_max)
    alphabet = layer_alphabet(n)
    words = [w for w in lyndon_words_int(n - 1, deg_max) if w.count(k - 1) == 1]
    return canonical_order(_bracketing(w, alphabet) for w in words)


def verify_in_kernels(gen: LieMonomial, n: int) -> bool:
    """True iff the monomial is killed by every face map d_1..d_n."""
    x = monomial_to_layered(gen, n)
    return all(face(x, i).is_zero() for i in range(1, n + 1))


def contains_all_letters(m: LieMonomial, n: int) -> bool:
    present = {s for s, _ in monomial_letters(m)}
    return all(_leaf(i, n) in present for i in range(1, n))

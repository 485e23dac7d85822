"""Degreewise Lie ideals of the free layer L[A[1,n], ..., A[n-1,n]].

A graded span keeps, for each degree q, an integer lattice of coordinate
vectors in the Lyndon basis of degree q (words in lexicographic order).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple

from .free_lie import Alphabet, Terms, Word, bracket_terms, lyndon_words_of_length
from .kohno import layer_alphabet
from .linalg import IntegerLattice, lattice_contains


@lru_cache(maxsize=None)
def lyndon_index(s: int, q: int) -> Dict[Word, int]:
    return {w: i for i, w in enumerate(lyndon_words_of_length(s, q))}


def terms_to_sparse(terms: Mapping[Word, int], s: int, q: int) -> Dict[int, int]:
    idx = lyndon_index(s, q)
    return {idx[w]: c for w, c in terms.items() if len(w) == q}


def row_to_terms(row, s: int, q: int) -> Terms:
    words = lyndon_words_of_length(s, q)
    return {words[i]: c for i, c in enumerate(row) if c}


@dataclass(frozen=True)
class GradedIdealSpan:
    alphabet: Alphabet
    deg_max: int
    components: Mapping[int, IntegerLattice]

    @property
    def size(self) -> int:
        return len(self.alphabet)

    def component(self, q: int) -> IntegerLattice:
        if q in self.components:
            return self.components[q]
        return IntegerLattice.zero(len(lyndon_words_of_length(self.size, q)))

    def rank(self, q: int) -> int:
        return self.component(q).rank

    def ranks(self) -> Dict[int, int]:
        return {q: self.rank(q) for q in range(1, self.deg_max + 1)}

    def basis_terms(self, q: int) -> List[Terms]:
        return [row_to_terms(r, self.size, q) for r in self.component(q).basis]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedIdealSpan):
            return NotImplemented
        return (self.alphabet == other.alphabet
                and all(self.component(q) == other.component(q)
                        for q in range(1, max(self.deg_max, other.deg_max) + 1)))

    def __add__(self, other: "GradedIdealSpan") -> "GradedIdealSpan":
        if self.alphabet != other.alphabet:
            raise ValueError("spans over different alphabets")
        D = min(self.deg_max, other.deg_max)
        return GradedIdealSpan(self.alphabet, D,
                               {q: self.component(q) + other.component(q) for q in range(1, D + 1)})


def _dim(s: int, q: int) -> int:
    return len(lyndon_words_of_length(s, q))


def _bracket_rows(s: int, xs: Iterable[Terms], ys: List[Terms], q: int) -> List[Dict[int, int]]:
    rows = []
    for x in xs:
        for y in ys:
            t = bracket_terms(x, y)
            if t:
                rows.append(terms_to_sparse(t, s, q))
    return rows


def span_from_components(alphabet: Alphabet, deg_max: int,
                         rows: Mapping[int, Iterable[Dict[int, int]]]) -> GradedIdealSpan:
    s = len(alphabet)
    return GradedIdealSpan(alphabet, deg_max, {
        q: IntegerLattice.from_sparse(_dim(s, q), rows.get(q, ())) for q in range(1, deg_max + 1)})


def ideal_of_letter(n: int, k: int, deg_max: int) -> GradedIdealSpan:
    """The ideal generated by A[k,n]: Lyndon basis monomials containing that letter."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 1..{n - 1}")
    s = n - 1
    rows = {q: [{i: 1} for i, w in enumerate(lyndon_words_of_length(s, q)) if k - 1 in w]
            for q in range(1, deg_max + 1)}
    return span_from_components(layer_alphabet(n), deg_max, rows)


def bracket_of_spans(U: GradedIdealSpan, V: GradedIdealSpan, deg_max: int) -> GradedIdealSpan:
    if U.alphabet != V.alphabet:
        raise ValueError("spans over different alphabets")
    s = U.size
    rows: Dict[int, List[Dict[int, int]]] = {}
    for q in range(2, deg_max + 1):
        acc = []
        for a in range(1, q):
            acc += _bracket_rows(s, U.basis_terms(a), V.basis_terms(q - a), q)
        rows[q] = acc
    return span_from_components(U.alphabet, deg_max, rows)


def symmetric_bracket_sum(n: int, deg_max: int) -> GradedIdealSpan:
    """Sum over orderings of the left-normed ideal brackets [[I_s1, I_s2], ..., I_s(n-1)]."""
    if n < 2:
        raise ValueError("need n >= 2")
    ideals = {k: ideal_of_letter(n, k, deg_max) for k in range(1, n)}
    memo: Dict[Tuple[int, ...], GradedIdealSpan] = {}

    def left_normed(order: Tuple[int, ...]) -> GradedIdealSpan:
        if order not in memo:
            if len(order) == 1:
                memo[order] = ideals[order[0]]
            else:
                memo[order] = bracket_of_spans(left_normed(order[:-1]), ideals[order[-1]], deg_max)
        return memo[order]

    total = None
    for order in itertools.permutations(range(1, n)):
        part = left_normed(order)
        total = part if total is None else total + part
    return total


def close_under_generators(span: GradedIdealSpan) -> GradedIdealSpan:
    """Smallest degreewise ideal containing the span, up to span.deg_max."""
    s = span.size
    letters = [{(i,): 1} for i in range(s)]
    comps: Dict[int, IntegerLattice] = {}
    for q in range(1, span.deg_max + 1):
        rows = [dict((j, x) for j, x in enumerate(r) if x) for r in span.component(q).basis]
        if q > 1:
            prev = [row_to_terms(r, s, q - 1) for r in comps[q - 1].basis]
            rows += _bracket_rows(s, prev, letters, q)
        comps[q] = IntegerLattice.from_sparse(_dim(s, q), rows)
    return GradedIdealSpan(span.alphabet, span.deg_max, comps)


def fat_bracket_sum(n: int, deg_max: int) -> GradedIdealSpan:
    """Ideal generated by all bracket arrangements whose entries cover every I_k.

    F[S]_d is the span of arrangements of degree d whose index set is exactly
    S; it is filled by increasing degree from brackets [F[S1]_a, F[S2]_b] with
    S1 ∪ S2 = S and a + b = d, then the full-coverage part is closed into an
    ideal.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    s = n - 1
    alphabet = layer_alphabet(n)
    indices = tuple(range(1, n))
    subsets = [frozenset(c) for r in range(1, s + 1) for c in itertools.combinations(indices, r)]
    F: Dict[frozenset, Dict[int, IntegerLattice]] = {S: {} for S in subsets}
    basis: Dict[Tuple[frozenset, int], List[Terms]] = {}
    singles = {k: ideal_of_letter(n, k, deg_max) for k in indices}

    def terms_of(S, d):
        key = (S, d)
        if key not in basis:
            basis[key] = [row_to_terms(r, s, d) for r in F[S][d].basis]
        return basis[key]

    for d in range(1, deg_max + 1):
        for S in subsets:
            if len(S) == 1:
                (k,) = S
                F[S][d] = singles[k].component(d)
                continue
            rows = []
            for S1 in subsets:
                for S2 in subsets:
                    if S1 | S2 != S:
                        continue
                    for a in range(1, d):
                        b = d - a
                        if (sorted(S1), a) > (sorted(S2), b):
                            continue
                        rows += _bracket_rows(s, terms_of(S1, a), terms_of(S2, b), d)
            F[S][d] = IntegerLattice.from_sparse(_dim(s, d), rows)
    full = frozenset(indices)
    gens = GradedIdealSpan(alphabet, deg_max, dict(F[full]))
    return close_under_generators(gens)


def is_ideal(span: GradedIdealSpan) -> bool:
    """Degreewise check that bracketing with every letter stays inside the span."""
    s = span.size
    letters = [{(i,): 1} for i in range(s)]
    for q in range(1, span.deg_max):
        target = span.component(q + 1)
        for x in span.basis_terms(q):
            for rows in _bracket_rows(s, [x], letters, q + 1):
                dense = [0] * target.dim
                for j, c in rows.items():
                    dense[j] = c
                if not lattice_contains(target, dense):
                    return False
    return True

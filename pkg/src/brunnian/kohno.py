"""The graded Lie algebra L(P_n) of the pure braid group.

L(P_n) is stored as the iterated semidirect sum of free layers: layer k
(2 <= k <= n) is the free Lie ring on A[1,k] < ... < A[k-1,k], and a layer-j
element acts on layer k > j by the derivation induced from the infinitesimal
braid relations.  Face maps delete a strand, coface maps insert one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

from .free_lie import (
    Alphabet,
    LieElement,
    LieMonomial,
    Terms,
    Word,
    _add_into,
    bracket_terms,
    homogeneous_component,
    standard_factorization,
    substitute,
)


@dataclass(frozen=True, order=True)
class BraidGenerator:
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"need 1 <= i < j, got A[{self.i},{self.j}]")

    @property
    def symbol(self) -> str:
        return f"A[{self.i},{self.j}]"

    @classmethod
    def parse(cls, symbol: str) -> "BraidGenerator":
        m = re.fullmatch(r"A\[(\d+),(\d+)\]", symbol.strip())
        if not m:
            raise ValueError(f"not a braid generator symbol: {symbol!r}")
        return cls(int(m.group(1)), int(m.group(2)))


@lru_cache(maxsize=None)
def layer_alphabet(k: int) -> Alphabet:
    """Alphabet A[1,k] < A[2,k] < ... < A[k-1,k]."""
    if k < 2:
        raise ValueError("layers start at k = 2")
    return Alphabet(tuple(f"A[{i},{k}]" for i in range(1, k)))


@dataclass(frozen=True, eq=False)
class LayeredElement:
    """Element of L(P_n): one free-Lie component per layer k = 2..n."""

    n: int
    layers: Mapping[int, LieElement]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("strand count must be nonnegative")
        full = {}
        for k in range(2, self.n + 1):
            x = self.layers.get(k)
            if x is None:
                x = LieElement.zero(layer_alphabet(k))
            elif x.alphabet != layer_alphabet(k):
                raise ValueError(f"layer {k} must use the alphabet A[*,{k}]")
            full[k] = x
        extra = set(self.layers) - set(full)
        if extra:
            raise ValueError(f"layers {sorted(extra)} out of range for n={self.n}")
        object.__setattr__(self, "layers", full)

    @classmethod
    def zero(cls, n: int) -> "LayeredElement":
        return cls(n, {})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LayeredElement):
            return NotImplemented
        return self.n == other.n and self.layers == other.layers

    def __hash__(self):
        return hash((self.n, tuple(self.layers.values())))

    def _check(self, other: "LayeredElement") -> None:
        if self.n != other.n:
            raise ValueError(f"strand counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "LayeredElement") -> "LayeredElement":
        self._check(other)
        return LayeredElement(self.n, {k: self.layers[k] + other.layers[k] for k in self.layers})

    def __sub__(self, other: "LayeredElement") -> "LayeredElement":
        self._check(other)
        return LayeredElement(self.n, {k: self.layers[k] - other.layers[k] for k in self.layers})

    def __neg__(self) -> "LayeredElement":
        return LayeredElement(self.n, {k: -x for k, x in self.layers.items()})

    def __rmul__(self, c: int) -> "LayeredElement":
        if not isinstance(c, int):
            return NotImplemented
        return LayeredElement(self.n, {k: c * x for k, x in self.layers.items()})

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.layers.values())

    def __bool__(self) -> bool:
        return not self.is_zero()

    def homogeneous_component(self, q: int) -> "LayeredElement":
        return LayeredElement(self.n, {k: homogeneous_component(x, q) for k, x in self.layers.items()})

    def __str__(self) -> str:
        parts = [f"L{k}: {x}" for k, x in self.layers.items() if not x.is_zero()]
        return "; ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"LayeredElement(n={self.n}, {self})"

    def to_json(self) -> dict:
        return {"n": self.n, "layers": {str(k): x.to_json() for k, x in self.layers.items()}}


def inject(g: BraidGenerator, n: int) -> LayeredElement:
    if g.j > n:
        raise ValueError(f"A[{g.i},{g.j}] does not exist on {n} strands")
    return LayeredElement(n, {g.j: LieElement.generator(layer_alphabet(g.j), g.symbol)})


def layered_from_layer(x: LieElement, k: int, n: int) -> LayeredElement:
    """Place a layer-k free Lie element into L(P_n)."""
    return LayeredElement(n, {k: x})


# ---------------------------------------------------------------------------
# derivation action of layer j on layer k > j
#
# Letters are 0-based: letter a of layer j is A[a+1, j].  For a generator
# A[a,b] (b < k) the infinitesimal braid relations give
#   [A[a,b], A[a,k]] =  [A[a,k], A[b,k]]
#   [A[a,b], A[b,k]] = -[A[a,k], A[b,k]]
#   [A[a,b], A[c,k]] =  0            for c not in {a, b}.

@lru_cache(maxsize=None)
def _act_gen(j: int, k: int, u: Word, c: int) -> Tuple[Tuple[Word, int], ...]:
    """delta(P_u)(A[c+1,k]) for a Lyndon word u of layer j."""
    if len(u) == 1:
        a, b = u[0], j - 1
        if c == a:
            return (((a, b), 1),)
        if c == b:
            return (((a, b), -1),)
        return ()
    u1, u2 = standard_factorization(u)
    g = {(c,): 1}
    acc: Terms = {}
    _add_into(acc, _act_terms(j, k, {u1: 1}, _act_terms(j, k, {u2: 1}, g)).items())
    _add_into(acc, _act_terms(j, k, {u2: 1}, _act_terms(j, k, {u1: 1}, g)).items(), -1)
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _act_word(j: int, k: int, u: Word, w: Word) -> Tuple[Tuple[Word, int], ...]:
    """delta(P_u)(P_w): extend the generator values as a derivation."""
    if len(w) == 1:
        return _act_gen(j, k, u, w[0])
    w1, w2 = standard_factorization(w)
    acc: Terms = {}
    _add_into(acc, bracket_terms(dict(_act_word(j, k, u, w1)), {w2: 1}).items())
    _add_into(acc, bracket_terms({w1: 1}, dict(_act_word(j, k, u, w2))).items())
    return tuple(sorted(acc.items()))


def _act_terms(j: int, k: int, x: Mapping[Word, int], y: Mapping[Word, int]) -> Terms:
    acc: Terms = {}
    for u, a in x.items():
        for w, b in y.items():
            _add_into(acc, _act_word(j, k, u, w), a * b)
    return acc


def act(x: LieElement, y: LieElement) -> LieElement:
    """[x, y] for x in layer j and y in layer k with j < k (lands in layer k)."""
    j = len(x.alphabet) + 1
    k = len(y.alphabet) + 1
    if x.alphabet != layer_alphabet(j) or y.alphabet != layer_alphabet(k) or not j < k:
        raise ValueError("act needs a lower-layer element acting on a higher layer")
    return LieElement._wrap(y.alphabet, _act_terms(j, k, x.terms, y.terms))


def lp_bracket(x: LayeredElement, y: LayeredElement) -> LayeredElement:
    x._check(y)
    out = {}
    for k in range(2, x.n + 1):
        acc = bracket_terms(x.layers[k].terms, y.layers[k].terms)
        for j in range(2, k):
            if x.layers[j] and y.layers[k]:
                _add_into(acc, _act_terms(j, k, x.layers[j].terms, y.layers[k].terms).items())
            if y.layers[j] and x.layers[k]:
                _add_into(acc, _act_terms(j, k, y.layers[j].terms, x.layers[k].terms).items(), -1)
        out[k] = LieElement._wrap(layer_alphabet(k), acc)
    return LayeredElement(x.n, out)


def monomial_to_layered(m: LieMonomial, n: int) -> LayeredElement:
    """Evaluate a bracket tree with leaves A[i,j] inside L(P_n)."""
    if isinstance(m, str):
        return inject(BraidGenerator.parse(m), n)
    return lp_bracket(monomial_to_layered(m[0], n), monomial_to_layered(m[1], n))


# ---------------------------------------------------------------------------
# faces and cofaces

def _face_index(g: BraidGenerator, k: int) -> Optional[BraidGenerator]:
    i, j = g.i, g.j
    if k in (i, j):
        return None
    if j < k:
        return g
    if i < k:
        return BraidGenerator(i, j - 1)
    return BraidGenerator(i - 1, j - 1)


def _coface_index(g: BraidGenerator, pos: int) -> BraidGenerator:
    return BraidGenerator(g.i + (g.i >= pos), g.j + (g.j >= pos))


@lru_cache(maxsize=None)
def _face_images(m: int, k: int) -> Dict[str, LieElement]:
    target = layer_alphabet(m - 1)
    images = {}
    for i in range(1, m):
        g = _face_index(BraidGenerator(i, m), k)
        images[f"A[{i},{m}]"] = (LieElement.zero(target) if g is None
                                 else LieElement.generator(target, g.symbol))
    return images


def face(x: LayeredElement, k: int) -> LayeredElement:
    """d_k: L(P_n) -> L(P_{n-1}), deleting strand k."""
    n = x.n
    if n < 2:
        raise ValueError("face maps need at least 2 strands")
    if not 1 <= k <= n:
        raise ValueError(f"face index {k} out of range 1..{n}")
    out = {}
    for m, layer in x.layers.items():
        if m < k:
            out[m] = layer
        elif m > k and m > 2:
            out[m - 1] = substitute(layer, _face_images(m, k), layer_alphabet(m - 1))
    return LayeredElement(n - 1, out)


@lru_cache(maxsize=None)
def _coface_images(b: int, pos: int) -> Dict[str, LieElement]:
    images = {}
    for a in range(1, b):
        g = _coface_index(BraidGenerator(a, b), pos)
        images[f"A[{a},{b}]"] = LieElement.generator(layer_alphabet(g.j), g.symbol)
    return images


def coface(x: LayeredElement, pos: int) -> LayeredElement:
    """d^pos: L(P_n) -> L(P_{n+1}), inserting a trivial strand at position pos."""
    n = x.n
    if not 1 <= pos <= n + 1:
        raise ValueError(f"coface position {pos} out of range 1..{n + 1}")
    out = {}
    for b, layer in x.layers.items():
        nb = b + (b >= pos)
        out[nb] = substitute(layer, _coface_images(b, pos), layer_alphabet(nb))
    return LayeredElement(n + 1, out)


def relation_elements(n: int):
    """The three families of infinitesimal braid relations, as bracket trees.

    Yields (label, monomial-or-sum) where a sum is a list of monomials; every
    entry must evaluate to zero in L(P_n).
    """
    gens = [BraidGenerator(i, j) for j in range(2, n + 1) for i in range(1, j)]
    for g in gens:
        for h in gens:
            if g < h and not {g.i, g.j} & {h.i, h.j}:
                yield f"[{g.symbol},{h.symbol}]", [(g.symbol, h.symbol)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                aij, aik, ajk = (f"A[{i},{j}]", f"A[{i},{k}]", f"A[{j},{k}]")
                yield f"[{aij},{aik}+{ajk}]", [(aij, aik), (aij, ajk)]
                yield f"[{aik},{aij}+{ajk}]", [(aik, aij), (aik, ajk)]


def evaluate_sum(monomials, n: int) -> LayeredElement:
    acc = LayeredElement.zero(n)
    for m in monomials:
        acc = acc + monomial_to_layered(m, n)
    return acc


__all__ = [
    "BraidGenerator",
    "LayeredElement",
    "act",
    "coface",
    "evaluate_sum",
    "face",
    "inject",
    "layer_alphabet",
    "layered_from_layer",
    "lp_bracket",
    "monomial_to_layered",
    "relation_elements",
]

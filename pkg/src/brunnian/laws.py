"""Seeded randomized checks of the Lie ring laws.

Each trial draws small random elements and tests antisymmetry, Jacobi and an
independent cross-check: the tensor-algebra commutator for the free Lie ring,
face and coface homomorphism for L(P_n).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List

from .free_lie import (
    Alphabet,
    LieElement,
    bracket,
    from_associative,
    lyndon_words_int,
    to_associative,
)
from .kohno import LayeredElement, coface, face, layer_alphabet, lp_bracket


@dataclass
class LawReport:
    name: str
    trials: int = 0
    failures: int = 0
    witnesses: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.trials > 0

    def record(self, ok: bool, witness: str) -> None:
        self.trials += 1
        if not ok:
            self.failures += 1
            if len(self.witnesses) < 3:
                self.witnesses.append(witness)

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.trials} trials, {self.failures} failures)"


def random_element(rng: random.Random, alphabet: Alphabet, deg_max: int,
                   max_terms: int = 3, coeff: int = 3) -> LieElement:
    words = lyndon_words_int(len(alphabet), deg_max)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = rng.randint(-coeff, coeff)
        if c:
            w = rng.choice(words)
            terms[w] = terms.get(w, 0) + c
    return LieElement._wrap(alphabet, {w: c for w, c in terms.items() if c})


def _split(rng: random.Random, total: int, parts: int) -> List[int]:
    # positive degree budgets summing to at most total
    cuts = sorted(rng.sample(range(1, total), parts - 1)) if total > parts else list(range(1, parts))
    bounds = [0] + cuts + [total]
    return [max(1, b - a) for a, b in zip(bounds, bounds[1:])]


def free_lie_laws(trials: int, seed: int, deg_max: int = 6, letters: int = 3) -> LawReport:
    rng = random.Random(seed)
    rep = LawReport(f"free_lie laws (degree <= {deg_max})")
    alphabet = Alphabet(tuple("abcdef"[:letters]))
    for _ in range(trials):
        dx, dy, dz = _split(rng, deg_max, 3)
        x = random_element(rng, alphabet, dx)
        y = random_element(rng, alphabet, dy)
        z = random_element(rng, alphabet, dz)
        xy = bracket(x, y)
        jac = bracket(xy, z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)
        px, py = to_associative(x), to_associative(y)
        ok = (xy + bracket(y, x)).is_zero() and jac.is_zero() \
            and to_associative(xy) == px * py - py * px \
            and from_associative(to_associative(xy)) == xy
        rep.record(ok, f"x={x} y={y} z={z}")
    return rep


def random_layered(rng: random.Random, n: int, deg_max: int) -> LayeredElement:
    chosen = [k for k in range(2, n + 1) if rng.random() < 0.5] or [rng.randint(2, n)]
    return LayeredElement(n, {k: random_element(rng, layer_alphabet(k), deg_max) for k in chosen})


def kohno_laws(trials: int, seed: int, n_max: int = 4, deg_max: int = 5) -> LawReport:
    rng = random.Random(seed)
    rep = LawReport(f"kohno laws (n <= {n_max}, degree <= {deg_max})")
    for _ in range(trials):
        n = rng.randint(3, n_max)
        dx, dy, dz = _split(rng, deg_max, 3)
        x = random_layered(rng, n, dx)
        y = random_layered(rng, n, dy)
        z = random_layered(rng, n, dz)
        xy = lp_bracket(x, y)
        jac = lp_bracket(xy, z) + lp_bracket(lp_bracket(y, z), x) + lp_bracket(lp_bracket(z, x), y)
        k = rng.randint(1, n)
        p = rng.randint(1, n + 1)
        ok = (xy + lp_bracket(y, x)).is_zero() and jac.is_zero() \
            and face(xy, k) == lp_bracket(face(x, k), face(y, k)) \
            and coface(xy, p) == lp_bracket(coface(x, p), coface(y, p))
        rep.record(ok, f"n={n} x={x} y={y} z={z} k={k} p={p}")
    return rep


def run_laws(seed: int, free_trials: int = 1000, kohno_trials: int = 200) -> List[LawReport]:
    return [free_lie_laws(free_trials, seed), kohno_laws(kohno_trials, seed + 1)]

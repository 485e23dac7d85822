"""Free Lie ring over Z on an ordered alphabet, in the Lyndon basis.

Internally a Lyndon word is a tuple of letter indices (positions in the
alphabet), so the alphabet order is the integer order and Python tuple
comparison is the lexicographic order on words.  Elements are sparse maps
from such words to nonzero ints.

Lie monomials (bracket trees) are plain nested tuples: a leaf is a symbol
string and ``(u, v)`` stands for ``[u, v]``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

Word = Tuple[int, ...]
Terms = Dict[Word, int]
LieMonomial = Union[str, Tuple["LieMonomial", "LieMonomial"]]


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator symbols; declaration order is the letter order."""

    symbols: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if len(set(symbols)) != len(symbols):
            raise ValueError("alphabet symbols must be distinct")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} is not in the alphabet") from None

    def encode(self, letters: Sequence[str]) -> Word:
        return tuple(self.index(s) for s in letters)

    def decode(self, word: Word) -> Tuple[str, ...]:
        return tuple(self.symbols[i] for i in word)

    def word_text(self, word: Word) -> str:
        return "".join(self.symbols[i] for i in word)


# ---------------------------------------------------------------------------
# Lyndon words

def _duval(k: int, n: int) -> Iterator[Word]:
    # Fredricksen-Kessler-Maiorana / Duval generation, lexicographic order
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


@lru_cache(maxsize=None)
def lyndon_words_int(k: int, deg_max: int) -> Tuple[Word, ...]:
    """Lyndon words over letters 0..k-1 of length <= deg_max, by (length, lex)."""
    if k < 1:
        raise ValueError("empty alphabet")
    if deg_max < 1:
        raise ValueError("deg_max must be at least 1")
    return tuple(sorted(_duval(k, deg_max), key=lambda w: (len(w), w)))


@lru_cache(maxsize=None)
def lyndon_words_of_length(k: int, q: int) -> Tuple[Word, ...]:
    """Lyndon words of length exactly q over k letters, lexicographic."""
    if k < 1:
        return ()
    return tuple(w for w in lyndon_words_int(k, q) if len(w) == q)


def lyndon_words(alphabet: Alphabet, deg_max: int) -> List[Tuple[str, ...]]:
    if len(alphabet) == 0:
        raise ValueError("empty alphabet")
    return [alphabet.decode(w) for w in lyndon_words_int(len(alphabet), deg_max)]


def is_lyndon(word: Sequence) -> bool:
    w = tuple(word)
    if not w:
        return False
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def standard_factorization(w: Word) -> Tuple[Word, Word]:
    """Split a Lyndon word w = uv with v its longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError("a single letter has no standard factorization")


def _bracketing(w: Word, alphabet: Alphabet) -> LieMonomial:
    if len(w) == 1:
        return alphabet.symbols[w[0]]
    u, v = standard_factorization(w)
    return (_bracketing(u, alphabet), _bracketing(v, alphabet))


def standard_bracketing(word: Sequence[str], alphabet: Alphabet) -> LieMonomial:
    w = alphabet.encode(word)
    if not is_lyndon(w):
        raise ValueError("not a Lyndon word")
    return _bracketing(w, alphabet)


# ---------------------------------------------------------------------------
# normal-form arithmetic on term maps

def _add_into(acc: Terms, terms: Iterable[Tuple[Word, int]], scale: int = 1) -> None:
    for w, c in terms:
        x = acc.get(w, 0) + scale * c
        if x:
            acc[w] = x
        else:
            acc.pop(w, None)


@lru_cache(maxsize=None)
def bracket_words(u: Word, v: Word) -> Tuple[Tuple[Word, int], ...]:
    """[P_u, P_v] for Lyndon words u, v, as sorted (word, coefficient) pairs."""
    if u == v:
        return ()
    if u > v:
        return tuple((w, -c) for w, c in bracket_words(v, u))
    if len(u) == 1 or standard_factorization(u)[1] >= v:
        return ((u + v, 1),)
    # u = u1 u2 with u2 < v:  [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
    u1, u2 = standard_factorization(u)
    acc: Terms = {}
    for w, c in bracket_words(u2, v):
        _add_into(acc, bracket_words(u1, w), c)
    for w, c in bracket_words(u1, v):
        _add_into(acc, bracket_words(w, u2), c)
    return tuple(sorted(acc.items(), key=lambda t: (len(t[0]), t[0])))


def bracket_terms(x: Mapping[Word, int], y: Mapping[Word, int]) -> Terms:
    acc: Terms = {}
    for u, a in x.items():
        for v, b in y.items():
            _add_into(acc, bracket_words(u, v), a * b)
    return acc


# ---------------------------------------------------------------------------
# elements

@dataclass(frozen=True, eq=False)
class LieElement:
    """An element of the free Lie ring over ``alphabet`` in the Lyndon basis."""

    alphabet: Alphabet
    terms: Mapping[Word, int]

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            w = tuple(w)
            if not is_lyndon(w) or any(not 0 <= i < len(self.alphabet) for i in w):
                raise ValueError(f"{w!r} is not a Lyndon word over the alphabet")
            if c:
                clean[w] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _wrap(cls, alphabet: Alphabet, terms: Terms) -> "LieElement":
        obj = object.__new__(cls)
        object.__setattr__(obj, "alphabet", alphabet)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "LieElement":
        return cls._wrap(alphabet, {})

    @classmethod
    def generator(cls, alphabet: Alphabet, symbol: str) -> "LieElement":
        return cls._wrap(alphabet, {(alphabet.index(symbol),): 1})

    @classmethod
    def from_words(cls, alphabet: Alphabet, terms: Mapping[Sequence[str], int]) -> "LieElement":
        """Build from {Lyndon word as symbol sequence: coefficient}."""
        return cls(alphabet, {alphabet.encode(w): c for w, c in terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.alphabet.symbols, frozenset(self.terms.items())))

    def _check(self, other: "LieElement") -> None:
        if self.alphabet != other.alphabet:
            raise ValueError("elements live over different alphabets")

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        acc = dict(self.terms)
        _add_into(acc, other.terms.items())
        return LieElement._wrap(self.alphabet, acc)

    def __sub__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        acc = dict(self.terms)
        _add_into(acc, other.terms.items(), -1)
        return LieElement._wrap(self.alphabet, acc)

    def __neg__(self) -> "LieElement":
        return LieElement._wrap(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __rmul__(self, k: int) -> "LieElement":
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return LieElement.zero(self.alphabet)
        return LieElement._wrap(self.alphabet, {w: k * c for w, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({len(w) for w in self.terms})

    def sorted_terms(self) -> List[Tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self) -> str:
        return element_text(self)

    def __repr__(self) -> str:
        return f"LieElement({element_text(self)})"

    def to_json(self) -> list:
        return [[monomial_to_json(_bracketing(w, self.alphabet)), str(c)] for w, c in self.sorted_terms()]


def bracket(x: LieElement, y: LieElement) -> LieElement:
    x._check(y)
    return LieElement._wrap(x.alphabet, bracket_terms(x.terms, y.terms))


def homogeneous_component(x: LieElement, q: int) -> LieElement:
    return LieElement._wrap(x.alphabet, {w: c for w, c in x.terms.items() if len(w) == q})


def element_text(x: LieElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for i, (w, c) in enumerate(x.sorted_terms()):
        body = f"{abs(c)}·({x.alphabet.word_text(w)})"
        if i == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# monomials

@lru_cache(maxsize=None)
def monomial_degree(m: LieMonomial) -> int:
    if isinstance(m, str):
        return 1
    return monomial_degree(m[0]) + monomial_degree(m[1])


@lru_cache(maxsize=None)
def monomial_letters(m: LieMonomial) -> Tuple[Tuple[str, int], ...]:
    """Leaf multiset as sorted (symbol, multiplicity) pairs."""
    if isinstance(m, str):
        return ((m, 1),)
    c = Counter(dict(monomial_letters(m[0])))
    c.update(dict(monomial_letters(m[1])))
    return tuple(sorted(c.items()))


def monomial_contains(m: LieMonomial, symbol: str) -> bool:
    return any(s == symbol for s, _ in monomial_letters(m))


@lru_cache(maxsize=None)
def monomial_text(m: LieMonomial) -> str:
    if isinstance(m, str):
        return m
    return f"[{monomial_text(m[0])},{monomial_text(m[1])}]"


def monomial_to_json(m: LieMonomial):
    if isinstance(m, str):
        return m
    return [monomial_to_json(m[0]), monomial_to_json(m[1])]


def monomial_from_json(obj) -> LieMonomial:
    if isinstance(obj, str):
        return obj
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return (monomial_from_json(obj[0]), monomial_from_json(obj[1]))
    raise ValueError(f"bad monomial JSON: {obj!r}")


_TOKEN = re.compile(r"\s*(?:(A\[\d+,\d+\])|([A-Za-z_][A-Za-z0-9_]*)|(\[)|(,)|(\]))")


def parse_monomial(text: str) -> LieMonomial:
    """Inverse of :func:`monomial_text`."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ValueError(f"cannot parse monomial at {text[pos:]!r}")
        pos = mt.end()
        leaf = mt.group(1) or mt.group(2)
        tokens.append(("leaf", leaf) if leaf else ("sym", mt.group(0).strip()))

    def parse(i):
        kind, val = tokens[i]
        if kind == "leaf":
            return val, i + 1
        if val != "[":
            raise ValueError(f"unexpected {val!r}")
        left, i = parse(i + 1)
        if tokens[i] != ("sym", ","):
            raise ValueError("expected ','")
        right, i = parse(i + 1)
        if tokens[i] != ("sym", "]"):
            raise ValueError("expected ']'")
        return (left, right), i + 1

    m, end = parse(0)
    if end != len(tokens):
        raise ValueError("trailing input after monomial")
    return m


def monomial_to_element(m: LieMonomial, alphabet: Alphabet) -> LieElement:
    if isinstance(m, str):
        return LieElement.generator(alphabet, m)
    return bracket(monomial_to_element(m[0], alphabet), monomial_to_element(m[1], alphabet))


# ---------------------------------------------------------------------------
# homomorphisms

def substitute(x: LieElement, images: Mapping[str, LieElement],
               target: Optional[Alphabet] = None) -> LieElement:
    """Apply the Lie homomorphism determined by ``images`` on generators."""
    if target is None:
        alphabets = {img.alphabet for img in images.values()}
        if len(alphabets) != 1:
            raise ValueError("cannot infer a single target alphabet from the images")
        target = alphabets.pop()
    for img in images.values():
        if img.alphabet != target:
            raise ValueError("image over the wrong alphabet")
    letter_images: Dict[int, Terms] = {}
    for i, s in enumerate(x.alphabet.symbols):
        if s in images:
            letter_images[i] = images[s].terms
    cache: Dict[Word, Terms] = {}

    def image(w: Word) -> Terms:
        if w in cache:
            return cache[w]
        if len(w) == 1:
            if w[0] not in letter_images:
                raise ValueError(f"no image given for {x.alphabet.symbols[w[0]]!r}")
            out = letter_images[w[0]]
        else:
            u, v = standard_factorization(w)
            out = bracket_terms(image(u), image(v))
        cache[w] = out
        return out

    acc: Terms = {}
    for w, c in x.terms.items():
        _add_into(acc, image(w).items(), c)
    return LieElement._wrap(target, acc)


# ---------------------------------------------------------------------------
# tensor-algebra embedding (oracle)

@dataclass(frozen=True, eq=False)
class AssocPoly:
    """Noncommutative polynomial with integer coefficients."""

    alphabet: Alphabet
    terms: Mapping[Word, int]

    def __post_init__(self):
        object.__setattr__(self, "terms", {tuple(w): int(c) for w, c in self.terms.items() if c})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AssocPoly):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __add__(self, other: "AssocPoly") -> "AssocPoly":
        acc = dict(self.terms)
        _add_into(acc, other.terms.items())
        return AssocPoly(self.alphabet, acc)

    def __sub__(self, other: "AssocPoly") -> "AssocPoly":
        acc = dict(self.terms)
        _add_into(acc, other.terms.items(), -1)
        return AssocPoly(self.alphabet, acc)

    def __mul__(self, other: "AssocPoly") -> "AssocPoly":
        if self.alphabet != other.alphabet:
            raise ValueError("polynomials live over different alphabets")
        acc: Terms = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                _add_into(acc, ((u + v, a * b),))
        return AssocPoly(self.alphabet, acc)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))
        out = []
        for i, (w, c) in enumerate(items):
            mag = "" if abs(c) == 1 else f"{abs(c)}·"
            body = mag + self.alphabet.word_text(w)
            out.append(("-" if c < 0 else "") + body if i == 0 else (" - " if c < 0 else " + ") + body)
        return "".join(out)


@lru_cache(maxsize=None)
def _assoc_word(w: Word) -> Tuple[Tuple[Word, int], ...]:
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    acc: Terms = {}
    for a, x in _assoc_word(u):
        for b, y in _assoc_word(v):
            _add_into(acc, ((a + b, x * y), (b + a, -x * y)))
    return tuple(sorted(acc.items()))


def to_associative(x: LieElement) -> AssocPoly:
    acc: Terms = {}
    for w, c in x.terms.items():
        _add_into(acc, _assoc_word(w), c)
    return AssocPoly(x.alphabet, acc)


def from_associative(p: AssocPoly) -> LieElement:
    """Recover Lyndon coordinates of a Lie polynomial.

    Uses triangularity: the expansion of a Lyndon basis element P_w is w plus
    lexicographically larger words of the same length.
    """
    rest: Terms = dict(p.terms)
    out: Terms = {}
    while rest:
        n = min(len(w) for w in rest)
        w = min(u for u in rest if len(u) == n)
        if not is_lyndon(w):
            raise ValueError("polynomial is not in the image of the free Lie ring")
        c = rest[w]
        out[w] = c
        _add_into(rest, _assoc_word(w), -c)
    return LieElement._wrap(p.alphabet, out)

"""Brute-force degreewise checks over the integers.

Coordinates for L_q(P_n) are the concatenated layer Lyndon bases
(layer 2 first, then layer 3, ...; lexicographic within a layer).
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .free_lie import LieElement, LieMonomial, Terms, Word, lyndon_words_of_length, monomial_degree
from .generators import kset, kset_counts, prop5_generators, prop6_generators
from .ideals import GradedIdealSpan, fat_bracket_sum, symmetric_bracket_sum
from .kohno import LayeredElement, coface, face, layer_alphabet, lp_bracket, monomial_to_layered
from .linalg import IntMatrix, IntegerLattice, kernel_lattice, lattice_witness, rank_rational
from .ranks import binomial, rank_brunnian, rank_pure, rank_table, witt_inversion, witt_rank


class BasisSizeError(RuntimeError):
    pass


@dataclass(frozen=True)
class DegreeBasis:
    n: int
    q: int
    labels: Tuple[Tuple[int, Word], ...]

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def index(self) -> Dict[Tuple[int, Word], int]:
        return _label_index(self)

    def offset(self, k: int) -> int:
        return next((i for i, (layer, _) in enumerate(self.labels) if layer == k), len(self.labels))

    def vector(self, x: LayeredElement) -> List[int]:
        """Coordinates of the degree-q part of x."""
        if x.n != self.n:
            raise ValueError("strand count mismatch")
        idx = self.index
        v = [0] * len(self.labels)
        for k, layer in x.layers.items():
            for w, c in layer.terms.items():
                if len(w) == self.q:
                    v[idx[k, w]] = c
        return v

    def element(self, v: Sequence[int]) -> LayeredElement:
        layers: Dict[int, Terms] = {}
        for (k, w), c in zip(self.labels, v):
            if c:
                layers.setdefault(k, {})[w] = c
        return LayeredElement(self.n, {k: LieElement._wrap(layer_alphabet(k), t) for k, t in layers.items()})

    def describe(self, v: Sequence[int]) -> str:
        return str(self.element(v))


@lru_cache(maxsize=None)
def _label_index(basis: DegreeBasis):
    return {lab: i for i, lab in enumerate(basis.labels)}


@lru_cache(maxsize=None)
def degree_basis(n: int, q: int) -> DegreeBasis:
    if q < 1 or n < 1:
        raise ValueError("need n >= 1 and q >= 1")
    labels = tuple((k, w) for k in range(2, n + 1) for w in lyndon_words_of_length(k - 1, q))
    if len(labels) != rank_pure(q, n):
        raise BasisSizeError(f"basis of L_{q}(P_{n}) has {len(labels)} elements, expected {rank_pure(q, n)}")
    return DegreeBasis(n, q, labels)


@lru_cache(maxsize=None)
def face_matrix(n: int, q: int, k: int) -> IntMatrix:
    """Matrix of d_k: L_q(P_n) -> L_q(P_{n-1}); column c is the image of basis element c."""
    src = degree_basis(n, q)
    dst = degree_basis(n - 1, q)
    cols = []
    for v in range(len(src)):
        unit = [0] * len(src)
        unit[v] = 1
        cols.append(dst.vector(face(src.element(unit), k)))
    rows = tuple(tuple(col[r] for col in cols) for r in range(len(dst)))
    return IntMatrix(len(dst), len(src), rows)


def kernel_of_faces(n: int, q: int, faces: Sequence[int]) -> IntegerLattice:
    """Saturated lattice of the intersection of ker d_k over the given k."""
    N = len(degree_basis(n, q))
    rows: Tuple[Tuple[int, ...], ...] = ()
    for k in faces:
        rows += face_matrix(n, q, k).rows
    return kernel_lattice(IntMatrix(len(rows), N, rows))


@lru_cache(maxsize=None)
def kernel_intersection(n: int, q: int) -> IntegerLattice:
    if n < 2 or q < 1:
        raise ValueError("need n >= 2 and q >= 1")
    return kernel_of_faces(n, q, range(1, n + 1))


def _brunnian_lattice(m: int, q: int) -> IntegerLattice:
    # one strand carries nothing
    if m < 2:
        return IntegerLattice.zero(0)
    return kernel_intersection(m, q)


def embed_layer(v: Sequence[int], n: int, q: int) -> List[int]:
    """Layer-n Lyndon coordinates -> L_q(P_n) coordinates."""
    basis = degree_basis(n, q)
    out = [0] * len(basis)
    off = basis.offset(n)
    for i, c in enumerate(v):
        out[off + i] = c
    return out


def embed_span(span: GradedIdealSpan, n: int, q: int) -> IntegerLattice:
    return IntegerLattice.from_rows(len(degree_basis(n, q)),
                                    [embed_layer(r, n, q) for r in span.component(q).basis])


def subalgebra_span(generators: Sequence[LieMonomial], n: int, q_max: int) -> Dict[int, IntegerLattice]:
    """Degreewise Z-span of the subalgebra of L(P_n) generated by the monomials."""
    images: Dict[int, List[LayeredElement]] = {}
    for g in generators:
        d = monomial_degree(g)
        if d <= q_max:
            images.setdefault(d, []).append(monomial_to_layered(g, n))
    spans: Dict[int, IntegerLattice] = {}
    elems: Dict[int, List[LayeredElement]] = {}
    for d in range(1, q_max + 1):
        basis = degree_basis(n, d)
        rows = [basis.vector(x) for x in images.get(d, [])]
        for a in range(1, d // 2 + 1):
            b = d - a
            for i, x in enumerate(elems[a]):
                for j, y in enumerate(elems[b]):
                    if a == b and j <= i:
                        continue
                    rows.append(basis.vector(lp_bracket(x, y)))
        spans[d] = IntegerLattice.from_rows(len(basis), rows)
        elems[d] = [basis.element(r) for r in spans[d].basis]
    return spans


# ---------------------------------------------------------------------------
# reports

@dataclass
class CheckReport:
    check: str
    n: int
    q_max: int
    status: str = "pass"
    observed: Dict = field(default_factory=dict)
    expected: Dict = field(default_factory=dict)
    details: List[str] = field(default_factory=list)
    witness: Optional[str] = None
    millis: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, degree: int, message: str, witness: Optional[str] = None) -> None:
        if self.status == "pass":
            self.status = "fail"
            self.witness = f"q={degree}: {message}" + (f"; {witness}" if witness else "")
        self.details.append(f"q={degree}: {message}")

    def to_dict(self) -> dict:
        details = {"observed": _jsonable(self.observed), "expected": _jsonable(self.expected),
                   "notes": self.details}
        if self.witness:
            details["witness"] = self.witness
        return {"check": self.check, "n": self.n, "q_max": self.q_max, "status": self.status,
                "details": details, "millis": self.millis}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        head = f"[{self.status.upper()}] {self.check} n={self.n} q_max={self.q_max}"
        lines = [head]
        for key in self.observed:
            lines.append(f"    {key}: observed {self.observed[key]} expected {self.expected.get(key)}")
        if self.witness:
            lines.append(f"    witness: {self.witness}")
        return "\n".join(lines)


def _jsonable(d):
    if isinstance(d, dict):
        return {str(k): _jsonable(v) for k, v in d.items()}
    if isinstance(d, (list, tuple)):
        return [_jsonable(x) for x in d]
    return d


def _timed(fn: Callable[..., CheckReport]) -> Callable[..., CheckReport]:
    def run(*args, **kwargs) -> CheckReport:
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.millis = int((time.perf_counter() - t0) * 1000)
        return rep
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _compare(rep: CheckReport, q: int, label: str, A: IntegerLattice, B: IntegerLattice,
             basis: DegreeBasis) -> None:
    if A != B:
        w = lattice_witness(A, B)
        rq_a = rank_rational(A.as_matrix()) if A.rank else 0
        rq_b = rank_rational(B.as_matrix()) if B.rank else 0
        kind = "over Q" if rq_a != rq_b else "over Z only (finite index)"
        rep.fail(q, f"{label}: lattices differ {kind}; ranks {A.rank} vs {B.rank}",
                 basis.describe(w) if w is not None else None)


@_timed
def check_kernel_ranks(n: int, q_max: int) -> CheckReport:
    rep = CheckReport("kernel", n, q_max)
    for q in range(1, q_max + 1):
        r = kernel_intersection(n, q).rank
        rep.observed[q] = r
        rep.expected[q] = rank_brunnian(q, n)
        if r != rep.expected[q]:
            rep.fail(q, f"kernel rank {r} != formula {rep.expected[q]}")
    return rep


@_timed
def check_theorem8(n: int, q_max: int) -> CheckReport:
    """K(n)_1 spans the kernel intersection over Z and its counts certify freeness."""
    rep = CheckReport("theorem8", n, q_max)
    gens = kset(n, 1, q_max).monomials
    spans = subalgebra_span(gens, n, q_max)
    free_ranks = witt_inversion(kset_counts(n, q_max), q_max)
    for q in range(1, q_max + 1):
        K = kernel_intersection(n, q)
        rep.observed[q] = {"span": spans[q].rank, "free": free_ranks[q]}
        rep.expected[q] = K.rank
        _compare(rep, q, "generator span vs kernel", spans[q], K, degree_basis(n, q))
        if free_ranks[q] != K.rank:
            rep.fail(q, f"free-generator series gives {free_ranks[q]}, kernel rank {K.rank}")
    return rep


@_timed
def check_prop3_prop5_prop6(n: int, k: int, q_max: int) -> CheckReport:
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 1..{n - 1}")
    rep = CheckReport(f"props(k={k})", n, q_max)
    p5 = prop5_generators(n, k, q_max)
    p6 = prop6_generators(n, k, q_max)
    c5 = _counts(p5)
    c6 = _counts(p6)
    span5 = subalgebra_span(p5, n, q_max)
    span6 = subalgebra_span(p6, n, q_max)
    free5 = witt_inversion(c5, q_max)
    free6 = witt_inversion(c6, q_max)
    for q in range(1, q_max + 1):
        basis = degree_basis(n, q)
        ker_n = kernel_of_faces(n, q, [n])
        layer_n = IntegerLattice.from_rows(len(basis), [
            [int(i == basis.offset(n) + t) for i in range(len(basis))]
            for t in range(witt_rank(q, n - 1))])
        if ker_n.rank != witt_rank(q, n - 1):
            rep.fail(q, f"ker d_{n} rank {ker_n.rank} != witt({q},{n - 1})")
        _compare(rep, q, f"ker d_{n} vs free layer", ker_n, layer_n, basis)
        K = kernel_of_faces(n, q, [n, k])
        rep.observed[q] = {"ker_n": ker_n.rank, "prop5": span5[q].rank, "prop6": span6[q].rank,
                           "count5": c5.get(q, 0), "count6": c6.get(q, 0)}
        rep.expected[q] = {"ker_n": witt_rank(q, n - 1), "kernel": K.rank}
        _compare(rep, q, "prop5 span vs ker d_n ∩ ker d_k", span5[q], K, basis)
        _compare(rep, q, "prop6 span vs ker d_n ∩ ker d_k", span6[q], K, basis)
        if free5[q] != K.rank or free6[q] != K.rank:
            rep.fail(q, f"free-generator series {free5[q]}/{free6[q]} != kernel rank {K.rank}")
        if c5.get(q, 0) != c6.get(q, 0):
            rep.fail(q, f"generator counts differ: {c5.get(q, 0)} vs {c6.get(q, 0)}")
    return rep


def _counts(monomials) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for m in monomials:
        d = monomial_degree(m)
        out[d] = out.get(d, 0) + 1
    return out


@_timed
def check_symmetric_sum(n: int, q_max: int) -> CheckReport:
    """Symmetric bracket sum = fat bracket sum = kernel intersection, over Z."""
    rep = CheckReport("symmetric", n, q_max)
    sym = symmetric_bracket_sum(n, q_max)
    fat = fat_bracket_sum(n, q_max)
    for q in range(1, q_max + 1):
        basis = degree_basis(n, q)
        S = embed_span(sym, n, q)
        F = embed_span(fat, n, q)
        K = kernel_intersection(n, q)
        rep.observed[q] = {"symmetric": S.rank, "fat": F.rank}
        rep.expected[q] = K.rank
        _compare(rep, q, "fat vs symmetric", F, S, basis)
        _compare(rep, q, "symmetric vs kernel", S, K, basis)
    return rep


def coface_images(n: int, q: int) -> List[Tuple[Tuple[int, ...], List[List[int]]]]:
    """For each increasing position sequence, coface images of the smaller Brunnian lattice."""
    basis = degree_basis(n, q)
    out = []
    for k in range(0, n):
        m = n - k
        Z = _brunnian_lattice(m, q)
        src = degree_basis(m, q) if m >= 1 else None
        for positions in itertools.combinations(range(1, n + 1), k):
            vecs = []
            for row in Z.basis:
                x = src.element(row)
                for p in positions:
                    x = coface(x, p)
                vecs.append(basis.vector(x))
            out.append((positions, vecs))
    return out


@_timed
def check_decomposition(n: int, q: int) -> CheckReport:
    """L_q(P_n) is the direct sum of coface images of smaller Brunnian parts."""
    rep = CheckReport("decomposition", n, q)
    N = rank_pure(q, n)
    pieces = coface_images(n, q)
    all_rows = [v for _, vecs in pieces for v in vecs]
    total = IntegerLattice.from_rows(N, all_rows)
    by_k: Dict[int, int] = {}
    for positions, vecs in pieces:
        by_k[len(positions)] = by_k.get(len(positions), 0) + len(vecs)
    table = rank_table(max(n, 2), q)
    expected_by_k = {k: binomial(n, k) * table.brunnian_all[q, n - k] for k in range(n)}
    rep.observed = {"pieces": by_k, "sum_of_ranks": len(all_rows), "lattice_rank": total.rank}
    rep.expected = {"pieces": expected_by_k, "sum_of_ranks": N, "lattice_rank": N}
    if by_k != expected_by_k:
        rep.fail(q, f"per-term ranks {by_k} != convolution terms {expected_by_k}")
    if len(all_rows) != N:
        rep.fail(q, f"sum of piece ranks {len(all_rows)} != rank L_q(P_n) = {N}")
    if total != IntegerLattice.full(N):
        missing = next((i for i in range(N) if [int(i == j) for j in range(N)] not in total), None)
        rep.fail(q, f"coface images span a sublattice of rank {total.rank} and index > 1",
                 degree_basis(n, q).describe([int(i == missing) for i in range(N)])
                 if missing is not None else None)
    return rep


@_timed
def check_bidelta(n: int, q: int) -> CheckReport:
    """The three face/coface identity families on every degree-q basis element."""
    rep = CheckReport("bidelta", n, q)
    basis = degree_basis(n, q)
    counts = {"faces": 0, "cofaces": 0, "mixed": 0}
    for idx in range(len(basis)):
        x = basis.element([int(i == idx) for i in range(len(basis))])
        if n >= 3:
            for i in range(1, n):
                for j in range(i, n):
                    counts["faces"] += 1
                    if face(face(x, i), j) != face(face(x, j + 1), i):
                        rep.fail(q, f"d_{j} d_{i} != d_{i} d_{j + 1}", str(x))
        for i in range(1, n + 2):
            for j in range(1, i + 1):
                counts["cofaces"] += 1
                if coface(coface(x, i), j) != coface(coface(x, j), i + 1):
                    rep.fail(q, f"d^{j} d^{i} != d^{i + 1} d^{j}", str(x))
        for i in range(1, n + 2):
            for j in range(1, n + 2):
                lhs = face(coface(x, i), j)
                if j < i:
                    rhs = coface(face(x, j), i - 1) if n >= 2 else None
                elif j == i:
                    rhs = x
                else:
                    rhs = coface(face(x, j - 1), i) if n >= 2 else None
                if rhs is None:
                    continue
                counts["mixed"] += 1
                if lhs != rhs:
                    rep.fail(q, f"d_{j} d^{i} identity fails", str(x))
    rep.observed = counts
    return rep


def check_convolution_identity(n_max: int, q_max: int) -> CheckReport:
    """rank L_q(P_n) = sum_k C(n,k) rank L_q^P(Brun_{n-k}), from the two closed forms."""
    rep = CheckReport("convolution", n_max, q_max)
    for n in range(1, n_max + 1):
        for q in range(1, q_max + 1):
            lhs = rank_pure(q, n)
            rhs = sum(binomial(n, k) * rank_brunnian(q, n - k) for k in range(n))
            if lhs != rhs:
                rep.fail(q, f"n={n}: {lhs} != {rhs}")
    return rep

"""Exact rational linear algebra and integer lattices.

Vectors are plain tuples of :class:`fractions.Fraction`; matrices are lists of
lists.  Nothing here ever touches a float.

A :class:`Lattice` lives inside an *ambient model*: any object providing
``dim`` (number of stored coordinates), ``inner(x, y)`` (the exact bilinear
form) and ``check(v)`` (raises on vectors outside the modeled space).
:class:`liecheck.roots.CartanModel` is the one used in practice.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DegenerateForm, EmptyGenerators, NotInSpan, NotSublattice

Vec = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# vectors

def vec(values: Iterable) -> Vec:
    return tuple(Fraction(x) for x in values)


def add(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Vec) -> Vec:
    return tuple(-a for a in x)


def scale(c, x: Vec) -> Vec:
    return tuple(c * a for a in x)


def is_zero(x: Vec) -> bool:
    return not any(x)


def common_denominator(values: Iterable[Fraction]) -> int:
    d = 1
    for q in values:
        d = lcm(d, q.denominator)
    return d


# ---------------------------------------------------------------------------
# serialization: "p/q" strings, "/q" omitted when q == 1

def fmt_q(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_q(s: str) -> Fraction:
    return Fraction(s.strip())


def vec_to_json(v: Sequence) -> list[str]:
    return [fmt_q(x) for x in v]


def vec_from_json(items: Sequence[str]) -> Vec:
    return tuple(parse_q(s) for s in items)


def mat_to_json(m: Sequence[Sequence]) -> list[list[str]]:
    return [vec_to_json(row) for row in m]


# ---------------------------------------------------------------------------
# dense rational matrices

def identity(n: int, one=1) -> list[list]:
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Sequence[Sequence], v: Sequence) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_inv(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q.  Raises ZeroDivisionError if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def det(a: Sequence[Sequence]) -> Fraction:
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    d = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return d


def rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


# ---------------------------------------------------------------------------
# integer normal forms

def _row_axpy(rows, dst, q, src):
    rows[dst] = [x - q * y for x, y in zip(rows[dst], rows[src])]


def hnf(M: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ M``, ``U`` unimodular, ``H`` in row
    echelon form with positive pivots and the entries above each pivot
    reduced into ``[0, pivot)``.  Zero rows end up at the bottom.
    """
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[p] = A[p], A[r]
            U[r], U[p] = U[p], U[r]
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    _row_axpy(A, i, q, r)
                    _row_axpy(U, i, q, r)
                    clean = clean and A[i][c] == 0
            if clean:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                _row_axpy(A, i, q, r)
                _row_axpy(U, i, q, r)
        r += 1
    return A, U


def snf(M: Sequence[Sequence[int]]):
    """Smith normal form ``S == U @ M @ V`` with ``d1 | d2 | ...`` and ``d_i >= 0``."""
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def col_axpy(dst, q, src):
        for mat in (A, V):
            for row in mat:
                row[dst] -= q * row[src]

    for t in range(min(m, n)):
        cand = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not cand:
            break
        _, i0, j0 = min(cand)
        A[t], A[i0] = A[i0], A[t]
        U[t], U[i0] = U[i0], U[t]
        swap_cols(t, j0)
        while True:
            for i in range(t + 1, m):
                q = A[i][t] // A[t][t]
                if q:
                    _row_axpy(A, i, q, t)
                    _row_axpy(U, i, q, t)
            for j in range(t + 1, n):
                q = A[t][j] // A[t][t]
                if q:
                    col_axpy(j, q, t)
            rest = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
            rest += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                _, i1, j1 = min(rest)
                if j1 == t:
                    A[t], A[i1] = A[i1], A[t]
                    U[t], U[i1] = U[i1], U[t]
                else:
                    swap_cols(t, j1)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            # fold the offending row in; the next pass shrinks the pivot
            _row_axpy(A, t, -1, bad[0])
            _row_axpy(U, t, -1, bad[0])
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return A, U, V


# ---------------------------------------------------------------------------
# lattices

def _gram(model, vectors: Sequence[Vec]) -> list[list[Fraction]]:
    return [[model.inner(a, b) for b in vectors] for a in vectors]


def dual_basis(model, vectors: Sequence[Vec]) -> list[Vec]:
    """Vectors ``u_i`` in the span of ``vectors`` with ``<u_i, v_j> = [i == j]``."""
    try:
        ginv = mat_inv(_gram(model, vectors))
    except ZeroDivisionError:
        raise DegenerateForm("form is degenerate on the span") from None
    k = len(vectors)
    dim = len(vectors[0])
    return [tuple(sum(ginv[i][j] * vectors[j][c] for j in range(k)) for c in range(dim))
            for i in range(k)]


@dataclass(frozen=True)
class Lattice:
    """A lattice, full rank in its own span, stored by its canonical basis.

    The basis is ``hnf(scale * generators) / scale``; the HNF commutes with
    positive integer scaling, so equal point sets give identical bases no
    matter which generators were used.
    """

    ambient: object = field(compare=False, repr=False)
    basis: tuple
    scale: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(b) if x) for b in self.basis)

    def coordinates(self, v: Vec) -> Vec:
        """Rational coefficients of ``v`` in the stored basis."""
        r = list(v)
        coeffs = []
        for b, p in zip(self.basis, self.pivots):
            c = r[p] / b[p]
            coeffs.append(c)
            if c:
                r = [x - c * y for x, y in zip(r, b)]
        if any(r):
            raise NotInSpan(f"{vec_to_json(v)} is not in the span of the lattice")
        return tuple(coeffs)

    def combine(self, coeffs: Sequence) -> Vec:
        out = [ZERO] * len(self.basis[0])
        for c, b in zip(coeffs, self.basis):
            if c:
                out = [x + c * y for x, y in zip(out, b)]
        return tuple(out)

    def __contains__(self, v) -> bool:
        return lattice_contains(self, v)

    def covolume_sq(self) -> Fraction:
        return det(_gram(self.ambient, self.basis))


def lattice_from_generators(gens: Iterable[Vec], ambient) -> Lattice:
    gens = [vec(g) for g in gens]
    if not gens:
        raise EmptyGenerators("cannot build a lattice from no generators")
    for g in gens:
        ambient.check(g)
    d = common_denominator(x for g in gens for x in g)
    H, _ = hnf([[int(x * d) for x in g] for g in gens])
    rows = [row for row in H if any(row)]
    if not rows:
        raise EmptyGenerators("generators span the zero lattice")
    basis = tuple(tuple(Fraction(x, d) for x in row) for row in rows)
    scale = common_denominator(x for b in basis for x in b)
    return Lattice(ambient, basis, scale)


def lattice_contains(L: Lattice, v: Vec) -> bool:
    """Exact membership; raises :class:`NotInSpan` for vectors off the span."""
    return all(c.denominator == 1 for c in L.coordinates(vec(v)))


def lattice_dual(L: Lattice) -> Lattice:
    return lattice_from_generators(dual_basis(L.ambient, L.basis), L.ambient)


def is_sublattice(sub: Lattice, sup: Lattice) -> bool:
    try:
        return all(b in sup for b in sub.basis)
    except NotInSpan:
        return False


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """The quotient ``sup / sub`` of two lattices with the same span.

    ``coset_reps[k]`` represents the coset whose SNF digit vector is the k-th
    element of ``itertools.product(*map(range, invariant_factors))``; the
    zero vector always represents coset 0.
    """

    invariant_factors: tuple[int, ...]
    coset_reps: tuple
    sub: Lattice = field(repr=False)
    sup: Lattice = field(repr=False)
    _V: tuple = field(repr=False)
    _diag: tuple = field(repr=False)

    @property
    def order(self) -> int:
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    def digits(self, v: Vec) -> tuple[int, ...]:
        """SNF digit vector of the coset containing ``v`` (``v`` in ``sup``)."""
        x = self.sup.coordinates(vec(v))
        if any(c.denominator != 1 for c in x):
            raise NotSublattice(f"{vec_to_json(v)} is not in the larger lattice")
        y = [sum(int(x[i]) * self._V[i][j] for i in range(len(x))) for j in range(len(x))]
        return tuple(y[j] % s for j, s in enumerate(self._diag) if s >= 2)

    def coset_index(self, v: Vec) -> int:
        idx = 0
        for d, f in zip(self.digits(v), self.invariant_factors):
            idx = idx * f + d
        return idx

    def congruent(self, a: Vec, b: Vec) -> bool:
        return sub(a, b) in self.sub


def reduce_mod(L: Lattice, v: Vec) -> Vec:
    """Representative of ``v + L`` in the half-open parallelepiped of L's basis."""
    c = L.coordinates(v)
    return L.combine([x - (x.numerator // x.denominator) for x in c])


def finite_quotient(sub_l: Lattice, sup_l: Lattice) -> FiniteAbelianGroup:
    if sub_l.rank != sup_l.rank:
        raise NotSublattice("lattices have different ranks")
    try:
        A = [sup_l.coordinates(b) for b in sub_l.basis]
    except NotInSpan as exc:
        raise NotSublattice(str(exc)) from None
    if any(c.denominator != 1 for row in A for c in row):
        raise NotSublattice("sub is not contained in sup")
    A = [[int(c) for c in row] for row in A]
    S, _, V = snf(A)
    k = len(A)
    diag = tuple(S[i][i] for i in range(k))
    factors = tuple(s for s in diag if s >= 2)
    Vinv = mat_inv(V)
    reps = []
    for digits in itertools.product(*(range(f) for f in factors)):
        it = iter(digits)
        y = [next(it) if s >= 2 else 0 for s in diag]
        x = [sum(y[j] * Vinv[j][i] for j in range(k)) for i in range(k)]
        reps.append(reduce_mod(sub_l, sup_l.combine(x)))
    return FiniteAbelianGroup(factors, tuple(reps), sub_l, sup_l,
                              tuple(tuple(r) for r in V), diag)

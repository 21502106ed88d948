"""Root systems of the compact simple types in explicit coordinates.

Coordinate models
-----------------
``A_n``     sum-zero vectors in R^(n+1), roots ``e_i - e_j``
``B_n``     R^n, roots ``+-e_i``, ``+-e_i +- e_j``
``C_n``     R^n, roots ``+-2e_i``, ``+-e_i +- e_j``
``D_n``     R^n, roots ``+-e_i +- e_j``
``E_6``     pairs ``(n, xi)`` standing for ``n*eps + xi`` with ``xi`` sum-zero in
            R^6 and ``eps`` a unit-direction vector orthogonal to it with
            ``<eps, eps> = 1/2``; stored as 7 coordinates ``(n, xi_1..xi_6)``
            with form ``n*m/2 + xi.zeta``
``E_7``     sum-zero R^8, roots ``eps_i - eps_j``, ``eps_i+eps_j+eps_k+eps_l``
``E_8``     sum-zero R^9, roots ``eps_i - eps_j``, ``+-(eps_i+eps_j+eps_k)``
``F_4``     R^4, roots ``+-e_i``, ``+-e_i +- e_j``, ``(+-e_1 +-e_2 +-e_3 +-e_4)/2``
``G_2``     sum-zero R^3, roots ``+-eps_i``, ``eps_i - eps_j``

where ``eps_i`` is ``e_i`` projected onto the sum-zero hyperplane.  The
positive chamber of every type is the lexicographic one, given as a list of
linear inequalities; simple roots, fundamental weights and the integer
Cartan data are derived from it and cross-checked at build time.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from . import kernels
from .errors import (ChamberMismatch, NotARoot, NotInSpan, OrbitCapExceeded,
                     UnsupportedRank, UsageError)
from .linalg import (ONE, ZERO, Vec, add, common_denominator, dual_basis, fmt_q, identity,
                     neg, scale, sub, vec, vec_to_json)

ORBIT_CAP = 10 ** 7

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family in _MIN_RANK:
            ok = self.rank >= _MIN_RANK[self.family]
        elif self.family in _FIXED_RANKS:
            ok = self.rank in _FIXED_RANKS[self.family]
        else:
            raise UnsupportedRank(f"unknown family {self.family!r}")
        if not ok:
            raise UnsupportedRank(f"{self.family}{self.rank} is outside the supported range")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise UsageError(f"cannot parse type {text!r}; expected e.g. D5")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanModel:
    """Coordinates for ft = ft* with a diagonal rational form.

    ``sum_zero`` is the half-open slice of coordinates constrained to sum to
    zero, or None.
    """

    tag: str
    dim: int
    gram: tuple
    sum_zero: tuple | None = None
    has_epsilon_axis: bool = False

    def __post_init__(self):
        # unit entries are shared so ``inner`` can skip the multiplication
        object.__setattr__(self, "gram", tuple(ONE if g == 1 else Fraction(g) for g in self.gram))

    @classmethod
    def euclidean(cls, n: int) -> "CartanModel":
        return cls(f"R^{n}", n, (ONE,) * n)

    @classmethod
    def sum_zero_space(cls, k: int) -> "CartanModel":
        return cls(f"sum-zero R^{k}", k, (ONE,) * k, (0, k))

    @property
    def rank(self) -> int:
        return self.dim - (1 if self.sum_zero else 0)

    @property
    def offset(self) -> int:
        """Index of the first xi-coordinate (1 for the E6 model, else 0)."""
        return 1 if self.has_epsilon_axis else 0

    def inner(self, x: Vec, y: Vec) -> Fraction:
        total = ZERO
        for g, a, b in zip(self.gram, x, y):
            if a and b:
                total += a * b if g is ONE else g * a * b
        return total

    def norm_sq(self, x: Vec) -> Fraction:
        return self.inner(x, x)

    def check(self, v: Vec) -> None:
        if len(v) != self.dim:
            raise NotInSpan(f"expected {self.dim} coordinates, got {len(v)}")
        if self.sum_zero:
            a, b = self.sum_zero
            if sum(v[a:b]) != 0:
                raise NotInSpan(f"{vec_to_json(v)} violates the sum-zero constraint")

    def contains(self, v: Vec) -> bool:
        try:
            self.check(v)
        except NotInSpan:
            return False
        return True

    def zero(self) -> Vec:
        return (ZERO,) * self.dim

    def e(self, i: int) -> Vec:
        """Standard basis vector; ``i`` is 1-based among the xi-coordinates."""
        v = [ZERO] * self.dim
        v[self.offset + i - 1] = Fraction(1)
        return tuple(v)

    def eps(self, i: int) -> Vec:
        """``e_i`` projected onto the sum-zero slice."""
        return self.project(self.e(i))

    def project(self, v: Vec) -> Vec:
        if not self.sum_zero:
            return vec(v)
        a, b = self.sum_zero
        mean = Fraction(sum(v[a:b])) / (b - a)
        return tuple(Fraction(x) - mean if a <= i < b else Fraction(x) for i, x in enumerate(v))

    def functional(self, coeffs: Sequence) -> Vec:
        """The vector ``u`` with ``<u, x> = sum(coeffs[i] * x[i])`` on the model."""
        return self.project(tuple(Fraction(c) / g for c, g in zip(coeffs, self.gram)))

    def epsilon(self) -> Vec:
        if not self.has_epsilon_axis:
            raise NotInSpan("this model has no epsilon axis")
        return (Fraction(1),) + (ZERO,) * (self.dim - 1)

    def parse(self, text: str) -> Vec:
        """Parse ``p/q,...`` (or ``n;x1,...,x6`` for the E6 model)."""
        text = text.strip()
        try:
            if self.has_epsilon_axis:
                if ";" not in text:
                    raise UsageError("E6 vectors are written n;x1,...,x6")
                head, tail = text.split(";", 1)
                parts = [head] + tail.split(",")
            else:
                parts = text.split(",")
            v = tuple(Fraction(p.strip()) for p in parts)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse vector {text!r}") from None
        try:
            self.check(v)
        except NotInSpan as exc:
            raise UsageError(str(exc)) from None
        return v

    def format(self, v: Vec) -> str:
        body = ",".join(fmt_q(x) for x in v[self.offset:])
        return f"{fmt_q(v[0])};{body}" if self.has_epsilon_axis else body

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "ambient_dim": self.dim,
            "sum_zero": self.sum_zero is not None,
            "has_epsilon_axis": self.has_epsilon_axis,
            "gram_diagonal": vec_to_json(self.gram),
        }


@dataclass(frozen=True)
class ChamberWall:
    """The inequality ``<normal, v> >= 0``; ``text`` is the human form."""

    text: str
    normal: Vec


@dataclass(frozen=True, eq=False)
class RootSystem:
    stype: SimpleType
    model: CartanModel
    roots: tuple
    highest_root: Vec
    chamber: tuple

    # -- derived data --------------------------------------------------------

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def interior_point(self) -> Vec:
        """Chamber point pairing to 1 with every wall normal (strictly interior)."""
        duals = dual_basis(self.model, [w.normal for w in self.chamber])
        out = self.model.zero()
        for d in duals:
            out = add(out, d)
        return out

    @cached_property
    def positive_roots(self) -> tuple:
        x0 = self.interior_point
        return tuple(r for r in self.roots if self.model.inner(r, x0) > 0)

    @cached_property
    def simple_roots(self) -> tuple:
        return _simple_roots(self)

    @cached_property
    def simple_coroots(self) -> tuple:
        return tuple(self.coroot(a) for a in self.simple_roots)

    @cached_property
    def cartan(self) -> tuple:
        """``cartan[j][i] = <alpha_j, alpha_i^vee>`` (integers)."""
        out = []
        for a in self.simple_roots:
            row = []
            for cv in self.simple_coroots:
                x = self.model.inner(a, cv)
                assert x.denominator == 1
                row.append(int(x))
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def fundamental_weights(self) -> tuple:
        return tuple(dual_basis(self.model, list(self.simple_coroots)))

    @cached_property
    def fundamental_coweights(self) -> tuple:
        """Dual basis to the simple roots: the extreme rays of the chamber."""
        return tuple(dual_basis(self.model, list(self.simple_roots)))

    @cached_property
    def marks(self) -> tuple:
        """Coefficients of the highest root in the simple roots."""
        return tuple(self.model.inner(self.highest_root, w) for w in self.fundamental_coweights)

    @cached_property
    def rho(self) -> Vec:
        total = self.model.zero()
        for r in self.positive_roots:
            total = add(total, r)
        return scale(Fraction(1, 2), total)

    @cached_property
    def longest_word(self) -> "WeylWord":
        """The word taking ``-rho`` to ``rho``; rho is regular, so this is w0."""
        return dominant_rep(self, neg(self.rho))[1]

    @cached_property
    def minus_id(self) -> bool:
        w0 = self.longest_word
        return all(w0.apply(a) == neg(a) for a in self.simple_roots)

    @cached_property
    def dual_index(self) -> tuple:
        """``i*`` with ``dominant_rep(-w_i) = w_{i*}`` for fundamental weights."""
        fw = self.fundamental_weights
        out = []
        for w in fw:
            d = dominant_rep(self, neg(w))[0]
            out.append(fw.index(d))
        return tuple(out)

    # -- helpers -------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.stype.rank

    def norm_sq(self, v: Vec) -> Fraction:
        return self.model.norm_sq(v)

    def inner(self, x: Vec, y: Vec) -> Fraction:
        return self.model.inner(x, y)

    def coroot(self, eta: Vec) -> Vec:
        return scale(2 / self.model.norm_sq(eta), eta)

    def labels(self, v: Vec) -> tuple:
        """Pairings of ``v`` with the simple coroots."""
        return tuple(self.model.inner(v, c) for c in self.simple_coroots)

    def from_labels(self, c: Sequence) -> Vec:
        out = self.model.zero()
        for x, w in zip(c, self.fundamental_weights):
            if x:
                out = add(out, scale(x, w))
        return out

    def is_root(self, v: Vec) -> bool:
        return tuple(v) in self.root_set

    def __repr__(self):
        return f"RootSystem({self.stype})"


# ---------------------------------------------------------------------------
# Weyl words

@dataclass(frozen=True)
class WeylWord:
    """Product of root reflections in composition order.

    ``letters = (r1, r2, ..., rk)`` denotes ``w_r1 o w_r2 o ... o w_rk``, so
    the last letter acts first.
    """

    system: RootSystem = field(compare=False, repr=False)
    letters: tuple = ()

    def __len__(self):
        return len(self.letters)

    def apply(self, v: Vec) -> Vec:
        for r in reversed(self.letters):
            v = _reflect(self.system.model, r, v)
        return v

    def __matmul__(self, other: "WeylWord") -> "WeylWord":
        return WeylWord(self.system, self.letters + other.letters)

    def inverse(self) -> "WeylWord":
        return WeylWord(self.system, tuple(reversed(self.letters)))

    @cached_property
    def matrix(self) -> list:
        """Exact matrix of the action on ambient coordinates."""
        model = self.system.model
        m = identity(model.dim, Fraction(1))
        for r in self.letters:
            refl = reflection_matrix(model, r)
            m = [[sum(m[i][k] * refl[k][j] for k in range(model.dim)) for j in range(model.dim)]
                 for i in range(model.dim)]
        return m

    def to_json(self) -> list:
        return [vec_to_json(r) for r in self.letters]


def reflection_matrix(model: CartanModel, eta: Vec) -> list:
    c = 2 / model.norm_sq(eta)
    return [[(1 if i == j else 0) - c * eta[i] * model.gram[j] * eta[j] for j in range(model.dim)]
            for i in range(model.dim)]


@lru_cache(maxsize=None)
def _two_over_norm(model: CartanModel, eta: Vec) -> Fraction:
    return 2 / model.norm_sq(eta)


def _reflect(model: CartanModel, eta: Vec, v: Vec) -> Vec:
    c = model.inner(eta, v) * _two_over_norm(model, eta)
    if not c:
        return tuple(v)
    return tuple(x - c * y for x, y in zip(v, eta))


def reflect(rs: RootSystem, eta: Vec, v: Vec) -> Vec:
    eta = vec(eta)
    if eta not in rs.root_set:
        raise NotARoot(f"{vec_to_json(eta)} is not a root of {rs.stype}")
    return _reflect(rs.model, eta, vec(v))


def identity_word(rs: RootSystem) -> WeylWord:
    return WeylWord(rs, ())


# ---------------------------------------------------------------------------
# chamber, dominance, orbits

def is_dominant(rs: RootSystem, v: Vec) -> bool:
    return all(rs.model.inner(w.normal, v) >= 0 for w in rs.chamber)


def is_dominant_by_simple_roots(rs: RootSystem, v: Vec) -> bool:
    return all(rs.model.inner(v, a) >= 0 for a in rs.simple_roots)


def simple_roots(rs: RootSystem) -> tuple:
    return rs.simple_roots


def fundamental_weights(rs: RootSystem) -> tuple:
    return rs.fundamental_weights


def _scaled_labels(rs: RootSystem, v: Vec):
    c = rs.labels(v)
    d = common_denominator(c)
    return [int(x * d) for x in c], d


def dominant_rep(rs: RootSystem, v: Vec) -> tuple[Vec, WeylWord]:
    """Dominant element of the Weyl orbit of ``v`` and a word taking ``v`` there."""
    v = vec(v)
    rs.model.check(v)
    ints, d = _scaled_labels(rs, v)
    dom, steps = kernels.to_dominant(ints, rs.cartan)
    word = WeylWord(rs, tuple(rs.simple_roots[j] for j in reversed(steps)))
    if not steps:
        return v, word
    return rs.from_labels([Fraction(x, d) for x in dom]), word


def weyl_orbit(rs: RootSystem, v: Vec, cap: int = ORBIT_CAP) -> tuple:
    """The Weyl orbit of ``v``, sorted lexicographically."""
    v = vec(v)
    rs.model.check(v)
    ints, d = _scaled_labels(rs, v)
    got = kernels.orbit(ints, rs.cartan, cap)
    if got is None:
        raise OrbitCapExceeded(f"orbit of {vec_to_json(v)} exceeds {cap} elements")
    return tuple(sorted(rs.from_labels([Fraction(x, d) for x in c]) for c in got))


def orbit_size(rs: RootSystem, v: Vec, cap: int = ORBIT_CAP) -> int:
    ints, _ = _scaled_labels(rs, vec(v))
    got = kernels.orbit(ints, rs.cartan, cap)
    if got is None:
        raise OrbitCapExceeded(f"orbit exceeds {cap} elements")
    return len(got)


def minus_id_in_weyl(rs: RootSystem) -> bool:
    return rs.minus_id


def dominant_roots(rs: RootSystem) -> list:
    return [r for r in rs.roots if is_dominant(rs, r)]


# ---------------------------------------------------------------------------
# construction

def _simple_roots(rs: RootSystem) -> tuple:
    pos = rs.positive_roots
    pos_set = set(pos)
    sums = {add(a, b) for a, b in itertools.combinations(pos, 2)}
    simple = [r for r in pos if r not in sums]
    if len(simple) != rs.rank:
        raise ChamberMismatch(f"{rs.stype}: found {len(simple)} simple roots, expected {rs.rank}")
    ordered = []
    for wall in rs.chamber:
        match = [a for a in simple if _positively_parallel(a, wall.normal)]
        if len(match) != 1:
            raise ChamberMismatch(f"{rs.stype}: wall {wall.text!r} is not orthogonal to a simple root")
        ordered.append(match[0])
    assert set(ordered) <= pos_set
    return tuple(ordered)


def _positively_parallel(a: Vec, b: Vec) -> bool:
    ratio = None
    for x, y in zip(a, b):
        if (x == 0) != (y == 0):
            return False
        if x:
            r = x / y
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return ratio is not None and ratio > 0


def _validate(rs: RootSystem) -> None:
    model = rs.model
    for r in rs.roots:
        model.check(r)
    if rs.highest_root not in rs.root_set:
        raise ChamberMismatch(f"{rs.stype}: highest root is not a root")
    x0 = rs.interior_point
    if any(model.inner(w.normal, x0) <= 0 for w in rs.chamber):
        raise ChamberMismatch(f"{rs.stype}: interior point is not interior")
    if any(model.inner(r, x0) == 0 for r in rs.roots):
        raise ChamberMismatch(f"{rs.stype}: interior point lies on a root hyperplane")
    rays = rs.fundamental_coweights
    for r in rs.roots:
        diff = sub(rs.highest_root, r)
        if any(model.inner(diff, ray) < 0 for ray in rays):
            raise ChamberMismatch(f"{rs.stype}: {vec_to_json(r)} beats the highest root")
    if not is_dominant(rs, rs.highest_root):
        raise ChamberMismatch(f"{rs.stype}: highest root is not dominant")


def _pm_pairs(model, n):
    out = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for s, t in itertools.product((1, -1), repeat=2):
            out.append(add(scale(s, model.e(i)), scale(t, model.e(j))))
    return out


def _ineq(model, text, coeffs):
    return ChamberWall(text, model.functional(coeffs))


def _chain(model, first, last):
    """Walls ``x_i >= x_{i+1}`` for ``first <= i < last`` (1-based xi indices)."""
    walls = []
    for i in range(first, last):
        c = [0] * model.dim
        c[model.offset + i - 1] = 1
        c[model.offset + i] = -1
        walls.append(_ineq(model, f"x{i} >= x{i + 1}", c))
    return walls


def _coeffs(model, terms):
    c = [Fraction(0)] * model.dim
    for idx, val in terms.items():
        pos = 0 if idx == "n" else model.offset + idx - 1
        c[pos] += Fraction(val)
    return c


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    f, n = t.family, t.rank
    if f == "A":
        model = CartanModel.sum_zero_space(n + 1)
        roots = [sub(model.e(i), model.e(j)) for i, j in itertools.permutations(range(1, n + 2), 2)]
        chamber = _chain(model, 1, n + 1)
        delta = sub(model.e(1), model.e(n + 1))
    elif f in "BCD":
        model = CartanModel.euclidean(n)
        roots = _pm_pairs(model, n)
        if f == "B":
            roots += [scale(s, model.e(i)) for i in range(1, n + 1) for s in (1, -1)]
        if f == "C":
            roots += [scale(2 * s, model.e(i)) for i in range(1, n + 1) for s in (1, -1)]
        if f == "D":
            chamber = _chain(model, 1, n - 1) + [
                _ineq(model, f"x{n - 1} >= x{n}", _coeffs(model, {n - 1: 1, n: -1})),
                _ineq(model, f"x{n - 1} >= -x{n}", _coeffs(model, {n - 1: 1, n: 1})),
            ]
        else:
            chamber = _chain(model, 1, n) + [_ineq(model, f"x{n} >= 0", _coeffs(model, {n: 1}))]
        delta = scale(2, model.e(1)) if f == "C" else add(model.e(1), model.e(2))
    elif f == "E" and n == 6:
        model = CartanModel("E6 (n, xi): n*eps + xi, xi sum-zero in R^6, <eps,eps> = 1/2",
                            7, (Fraction(1, 2),) + (Fraction(1),) * 6, (1, 7), True)
        eps = model.epsilon()
        roots = [scale(2, eps), scale(-2, eps)]
        roots += [sub(model.eps(i), model.eps(j)) for i, j in itertools.permutations(range(1, 7), 2)]
        for trip in itertools.combinations(range(1, 7), 3):
            base = model.zero()
            for i in trip:
                base = add(base, model.eps(i))
            roots += [add(base, eps), sub(base, eps)]
        chamber = _chain(model, 2, 6) + [
            _ineq(model, "x1 + x5 + x6 >= n/2", _coeffs(model, {1: 1, 5: 1, 6: 1, "n": Fraction(-1, 2)})),
            _ineq(model, "n/2 >= 0", _coeffs(model, {"n": Fraction(1, 2)})),
        ]
        delta = sub(model.eps(1), model.eps(6))
    elif f == "E" and n == 7:
        model = CartanModel.sum_zero_space(8)
        roots = [sub(model.eps(i), model.eps(j)) for i, j in itertools.permutations(range(1, 9), 2)]
        for quad in itertools.combinations(range(1, 9), 4):
            v = model.zero()
            for i in quad:
                v = add(v, model.eps(i))
            roots.append(v)
        chamber = _chain(model, 2, 8) + [
            _ineq(model, "x1 + x6 + x7 + x8 >= 0", _coeffs(model, {1: 1, 6: 1, 7: 1, 8: 1}))]
        delta = sub(model.eps(1), model.eps(8))
    elif f == "E" and n == 8:
        model = CartanModel.sum_zero_space(9)
        roots = [sub(model.eps(i), model.eps(j)) for i, j in itertools.permutations(range(1, 10), 2)]
        for trip in itertools.combinations(range(1, 10), 3):
            v = model.zero()
            for i in trip:
                v = add(v, model.eps(i))
            roots += [v, neg(v)]
        chamber = _chain(model, 2, 9) + [
            _ineq(model, "x2 + x3 + x4 <= 0", _coeffs(model, {2: -1, 3: -1, 4: -1}))]
        delta = sub(model.eps(1), model.eps(9))
    elif f == "F":
        model = CartanModel.euclidean(4)
        roots = _pm_pairs(model, 4)
        roots += [scale(s, model.e(i)) for i in range(1, 5) for s in (1, -1)]
        half = Fraction(1, 2)
        roots += [tuple(half * s for s in signs) for signs in itertools.product((1, -1), repeat=4)]
        chamber = _chain(model, 2, 4) + [
            _ineq(model, "x4 >= 0", _coeffs(model, {4: 1})),
            _ineq(model, "x1 >= x2 + x3 + x4", _coeffs(model, {1: 1, 2: -1, 3: -1, 4: -1})),
        ]
        delta = add(model.e(1), model.e(2))
    elif f == "G":
        model = CartanModel.sum_zero_space(3)
        roots = [scale(s, model.eps(i)) for i in range(1, 4) for s in (1, -1)]
        roots += [sub(model.eps(i), model.eps(j)) for i, j in itertools.permutations(range(1, 4), 2)]
        chamber = [_ineq(model, "0 >= x2", _coeffs(model, {2: -1})),
                   _ineq(model, "x2 >= x3", _coeffs(model, {2: 1, 3: -1}))]
        delta = sub(model.eps(1), model.eps(3))
    else:  # pragma: no cover - SimpleType already validated
        raise UnsupportedRank(str(t))
    roots = tuple(sorted(set(vec(r) for r in roots)))
    rs = RootSystem(t, model, roots, vec(delta), tuple(chamber))
    _validate(rs)
    rs.simple_roots  # noqa: B018 - force the chamber cross-check now
    return rs


# Implications the chamber descriptions are claimed to carry ("these
# conditions imply x1 >= x2").  Checked, not assumed.
_NOTED_IMPLICATIONS = {
    ("E", 6): {1: 1, 2: -1},
    ("E", 7): {1: 1, 2: -1},
    ("E", 8): {1: 1, 2: -1},
    ("F", 4): {1: 1, 2: -1},
    ("G", 2): {1: 1, 2: -1},
}


def chamber_implications(rs: RootSystem) -> dict:
    """Check the noted ``x1 >= x2`` implication on every extreme ray of the chamber."""
    key = (rs.stype.family, rs.stype.rank)
    if key not in _NOTED_IMPLICATIONS:
        return {}
    u = rs.model.functional(_coeffs(rs.model, _NOTED_IMPLICATIONS[key]))
    holds = all(rs.model.inner(u, ray) >= 0 for ray in rs.fundamental_coweights)
    return {"x1 >= x2": holds}


def describe(rs: RootSystem) -> dict:
    return {
        "type": rs.stype.family,
        "rank": rs.rank,
        "model": rs.model.to_json(),
        "root_count": len(rs.roots),
        "roots": [vec_to_json(r) for r in rs.roots],
        "highest_root": vec_to_json(rs.highest_root),
        "simple_roots": [vec_to_json(a) for a in rs.simple_roots],
        "chamber": [{"inequality": w.text, "normal": vec_to_json(w.normal)} for w in rs.chamber],
        "minus_id_in_weyl": rs.minus_id,
        "chamber_notes": chamber_implications(rs),
    }


def default_types() -> list:
    """Every type/rank the default sweep covers."""
    out = [SimpleType("A", n) for n in range(1, 9)]
    out += [SimpleType("B", n) for n in range(2, 9)]
    out += [SimpleType("C", n) for n in range(3, 9)]
    out += [SimpleType("D", n) for n in range(4, 10)]
    out += [SimpleType("E", 6), SimpleType("E", 7), SimpleType("E", 8),
            SimpleType("F", 4), SimpleType("G", 2)]
    return out

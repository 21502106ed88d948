"""Root-system claims behind the reversor construction, with certificates.

For a dominant cocharacter ``lam`` and highest root ``delta``:

(a) if ``<lam, delta> <= 2`` then ``lam`` is a sum ``sum a_i eta_i`` of pairwise
    orthogonal roots with ``<lam, eta_i> = 2``;
(b) the roots ``eta`` with ``delta +- eta`` a root generate every root under
    addition inside the root set;
(c) if ``-id`` is not in W and ``<lam, delta> > 2``, every nonzero weight can
    be moved by W to pair with ``lam`` to more than 1 in absolute value;
(d) if ``-id`` is not in W, ``delta`` is the only dominant root.

A reversor is a Weyl word ``w`` with ``w(lam) = -lam``.  Words are built in
the dominant frame and conjugated back: with ``u(lam) = lam_dom``, a reflection
``w_eta`` in the dominant frame becomes ``w_{u^-1 eta}`` in the original one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .errors import (DecompositionNotFound, EmptyRepresentation, Inapplicable, NoReversor,
                     NotProper, PairingTooLarge, PreconditionViolated, ZeroCocharacter)
from .lattices import lattice_family
from .linalg import (Vec, add, common_denominator, fmt_q, is_zero, lattice_contains, neg,
                     scale, sub, vec, vec_to_json)
from .roots import RootSystem, WeylWord, dominant_rep, identity_word, is_dominant

KINDS = ("NotSemifree", "IsotropyViolation", "Fullness", "ClaimCViolator",
         "NoReversor", "Reversor", "OrthogonalDecomposition")


# ---------------------------------------------------------------------------
# certificates

@dataclass
class Witness:
    """Self-contained certificate: everything needed to re-check it is stored."""

    kind: str
    lam: Vec
    word: tuple = ()
    pairing: Fraction = Fraction(0)
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, "lambda": vec_to_json(self.lam),
                "word": [vec_to_json(r) for r in self.word],
                "pairing": fmt_q(self.pairing), "details": jsonable(self.details)}

    def verify(self, rs: RootSystem) -> bool:
        return not problems(rs, self)


def jsonable(x):
    if isinstance(x, Fraction):
        return fmt_q(x)
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    if isinstance(x, tuple) and x and all(isinstance(c, Fraction) for c in x):
        return vec_to_json(x)
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def _word(rs, w: Witness) -> WeylWord:
    return WeylWord(rs, tuple(w.word))


def problems(rs: RootSystem, w: Witness) -> list[str]:
    """Independent re-check of a witness; returns the failed conditions."""
    out = []
    m = rs.model
    if w.kind not in KINDS:
        return [f"unknown kind {w.kind}"]
    if any(not rs.is_root(r) for r in w.word):
        out.append("word letter is not a root")
        return out
    word = _word(rs, w)
    lam = w.lam
    d = w.details
    if w.kind == "Reversor":
        if word.apply(lam) != neg(lam):
            out.append("word does not send lambda to -lambda")
    elif w.kind == "OrthogonalDecomposition":
        dec = OrthogonalDecomposition(tuple((Fraction(a), vec(e)) for a, e in d["terms"]))
        out.extend(dec.problems(rs, lam))
    elif w.kind == "NotSemifree":
        a = d["weight"]
        if m.inner(a, lam) != w.pairing:
            out.append("recorded pairing does not match")
        if abs(w.pairing) <= 1:
            out.append("pairing is not larger than 1 in absolute value")
    elif w.kind == "IsotropyViolation":
        eta = d["root"]
        image = word.apply(eta)
        if not rs.is_root(eta) or eta in d.get("subgroup_roots", ()):
            out.append("root is not outside the subgroup")
        if m.inner(image, lam) != w.pairing:
            out.append("recorded pairing does not match")
        if abs(w.pairing) <= 2:
            out.append("pairing does not exceed 2")
    elif w.kind == "ClaimCViolator":
        a, b = d["weight"], d["dual_weight"]
        if m.inner(a, lam) != w.pairing:
            out.append("recorded pairing does not match")
        if max(m.inner(a, lam), m.inner(b, lam)) > 1:
            out.append("weight is not a violator")
    elif w.kind == "Fullness":
        closure = _closure(rs, d["forced"])
        if set(closure) != rs.root_set:
            out.append("closure of the forced roots is not every root")
    elif w.kind == "NoReversor":
        dom, dom_neg = d["dominant"], d["dominant_of_negative"]
        if dominant_rep(rs, lam)[0] != dom or dominant_rep(rs, neg(lam))[0] != dom_neg:
            out.append("recorded dominant representatives do not match")
        if dom == dom_neg:
            out.append("lambda and -lambda share an orbit")
    return out


# ---------------------------------------------------------------------------
# (a) orthogonal decompositions

@dataclass(frozen=True)
class OrthogonalDecomposition:
    terms: tuple  # ((a_i, eta_i), ...)

    @property
    def roots(self) -> tuple:
        return tuple(e for _, e in self.terms)

    def total(self, rs: RootSystem) -> Vec:
        out = rs.model.zero()
        for a, e in self.terms:
            out = add(out, scale(a, e))
        return out

    def problems(self, rs: RootSystem, lam: Vec) -> list[str]:
        out = []
        if not self.terms:
            out.append("empty decomposition")
        for a, e in self.terms:
            if not rs.is_root(e):
                out.append(f"{vec_to_json(e)} is not a root")
            if rs.inner(lam, e) != 2:
                out.append(f"<lambda, {vec_to_json(e)}> != 2")
            if a * rs.norm_sq(e) != 2:
                out.append(f"coefficient {fmt_q(a)} times norm is not 2")
        for i, (_, e) in enumerate(self.terms):
            for _, f in self.terms[i + 1:]:
                if rs.inner(e, f):
                    out.append(f"{vec_to_json(e)} and {vec_to_json(f)} are not orthogonal")
        if self.total(rs) != tuple(lam):
            out.append("terms do not sum to lambda")
        return out

    def reflections(self, rs: RootSystem) -> WeylWord:
        return WeylWord(rs, self.roots)

    def to_witness(self, lam: Vec) -> Witness:
        return Witness("OrthogonalDecomposition", tuple(lam), self.roots, Fraction(2),
                       {"terms": [[fmt_q(a), vec_to_json(e)] for a, e in self.terms]})


def _require_nonzero(lam):
    if is_zero(lam):
        raise ZeroCocharacter("lambda is zero")


def _search_decomposition(rs: RootSystem, lam: Vec):
    cands = [r for r in rs.roots if rs.inner(lam, r) == 2]

    def go(start, rest, chosen):
        if is_zero(rest):
            return list(chosen)
        for k in range(start, len(cands)):
            e = cands[k]
            if rs.inner(rest, e) != 2 or any(rs.inner(e, f) for f in chosen):
                continue
            chosen.append(e)
            got = go(k + 1, sub(rest, scale(2 / rs.norm_sq(e), e)), chosen)
            if got is not None:
                return got
            chosen.pop()
        return None

    return go(0, tuple(lam), [])


def decompose_orthogonal(rs: RootSystem, lam: Vec) -> OrthogonalDecomposition:
    """First orthogonal decomposition in lexicographic root order."""
    lam = vec(lam)
    rs.model.check(lam)
    _require_nonzero(lam)
    if not is_dominant(rs, lam):
        raise PreconditionViolated("lambda is not dominant", lam)
    p = rs.inner(lam, rs.highest_root)
    if p > 2:
        raise PairingTooLarge(f"<lambda, delta> = {fmt_q(p)} > 2")
    found = _search_decomposition(rs, lam)
    if found is None:
        raise DecompositionNotFound(f"no orthogonal decomposition of {vec_to_json(lam)}")
    return OrthogonalDecomposition(tuple((2 / rs.norm_sq(e), e) for e in found))


# ---------------------------------------------------------------------------
# (b) additive closure

@dataclass(frozen=True)
class RootSubset:
    members: tuple  # sorted

    def __contains__(self, r) -> bool:
        return tuple(r) in set(self.members)

    def __len__(self):
        return len(self.members)

    def to_json(self) -> list:
        return [vec_to_json(r) for r in self.members]


def _closure(rs: RootSystem, seed: Iterable[Vec]) -> tuple:
    roots = rs.roots
    d = common_denominator(x for r in roots for x in r)
    ints = [tuple(int(x * d) for x in r) for r in roots]
    index = {r: i for i, r in enumerate(roots)}
    got = kernels.additive_closure(ints, sorted({index[tuple(s)] for s in seed}))
    return tuple(roots[i] for i in got)


def seed_set(rs: RootSystem) -> tuple:
    delta = rs.highest_root
    return tuple(r for r in rs.roots
                 if rs.is_root(add(delta, r)) or rs.is_root(sub(delta, r)))


def closure_from_seed(rs: RootSystem) -> RootSubset:
    return RootSubset(_closure(rs, seed_set(rs)))


def additive_closure(rs: RootSystem, seed: Iterable[Vec]) -> RootSubset:
    return RootSubset(_closure(rs, seed))


def is_additively_closed(rs: RootSystem, members: Iterable[Vec]):
    """``None`` if closed, else the first ``(a, b, a+b)`` that escapes."""
    ms = sorted(set(map(tuple, members)))
    mset = set(ms)
    for a in ms:
        for b in ms:
            s = add(a, b)
            if rs.is_root(s) and s not in mset:
                return a, b, s
    return None


def verify_claim_b(rs: RootSystem) -> bool:
    if rs.rank < 2:
        raise Inapplicable("rank 1: no root other than +-delta neighbours delta, the seed is empty")
    return set(closure_from_seed(rs).members) == rs.root_set


# ---------------------------------------------------------------------------
# (c) weights pushed past pairing 1

@dataclass
class ClaimCResult:
    """Outcome of the claim (c) check for one dominant ``lam``.

    ``m`` is ``min_i <w_i, lam>`` over fundamental weights.  ``reduced`` is
    ``min_i max(<w_i, lam>, <w_i*, lam>)`` where ``w_i* = dom(-w_i)``; the claim
    holds for every nonzero weight exactly when ``reduced > 1``.  ``m > 1`` is
    sufficient but not necessary.
    """

    lam: Vec
    m: Fraction
    reduced: Fraction
    certificates: list
    violators: list

    @property
    def holds(self) -> bool:
        return self.reduced > 1

    @property
    def literal_holds(self) -> bool:
        return self.m > 1


def _claim_c_pre(rs: RootSystem, lam: Vec) -> None:
    fam = lattice_family(rs)
    if rs.minus_id:
        raise Inapplicable(f"-id lies in the Weyl group of {rs.stype}")
    if is_zero(lam) or not lattice_contains(fam.coroot, lam):
        raise Inapplicable("lambda must be a nonzero coroot-lattice vector")
    if not is_dominant(rs, lam):
        raise Inapplicable("lambda must be dominant")
    if rs.inner(lam, rs.highest_root) <= 2:
        raise Inapplicable("<lambda, delta> must exceed 2")


def claim_c_check(rs: RootSystem, lam: Vec) -> ClaimCResult:
    """Certificates: for each fundamental weight ``w_i``, a word ``s`` with ``|<s w_i, lam>| > 1``.

    For dominant ``lam``, ``<w_i, lam>`` is the largest pairing over the orbit of
    ``w_i`` and ``-<w_i*, lam>`` the smallest, reached by the word sending
    ``-w_i`` to ``w_i*`` (applied to ``w_i`` it gives ``-w_i*``).
    """
    lam = vec(lam)
    rs.model.check(lam)
    _claim_c_pre(rs, lam)
    fw = rs.fundamental_weights
    own = [rs.inner(w, lam) for w in fw]
    certs, bad = [], []
    reduced = None
    for i, w in enumerate(fw):
        j = rs.dual_index[i]
        top = max(own[i], own[j])
        reduced = top if reduced is None else min(reduced, top)
        if own[i] > 1:
            word, p = identity_word(rs), own[i]
        else:
            word = dominant_rep(rs, neg(w))[1]
            p = rs.inner(word.apply(w), lam)
        if abs(p) > 1:
            certs.append({"weight": w, "word": word.letters, "pairing": p})
        else:
            bad.append(Witness("ClaimCViolator", lam, (), own[i],
                               {"weight": w, "dual_weight": fw[j],
                                "dual_pairing": own[j]}))
    return ClaimCResult(lam, min(own), reduced, certs, bad)


def claim_c_brute_force(rs: RootSystem, lam: Vec, weights: Iterable[Vec]):
    """First weight none of whose orbit points pairs past 1 with ``lam``, or ``None``."""
    from .roots import weyl_orbit

    for a in weights:
        if is_zero(a):
            continue
        if all(abs(rs.inner(x, lam)) <= 1 for x in weyl_orbit(rs, a)):
            return a
    return None


# ---------------------------------------------------------------------------
# (d) dominant roots

def verify_claim_d(rs: RootSystem) -> tuple[bool, list]:
    doms = sorted((r for r in rs.roots if is_dominant(rs, r)), reverse=True)
    return doms == [rs.highest_root], doms


# ---------------------------------------------------------------------------
# reversors

def _conjugate(rs: RootSystem, u: WeylWord, roots: Sequence[Vec]) -> WeylWord:
    """``u^-1 o (w_r1 ... w_rk) o u`` as the word ``w_{u^-1 r1} ... w_{u^-1 rk}``."""
    inv = u.inverse()
    return WeylWord(rs, tuple(inv.apply(r) for r in roots))


def reversor_with_path(rs: RootSystem, lam: Vec) -> tuple[WeylWord, str]:
    lam = vec(lam)
    rs.model.check(lam)
    _require_nonzero(lam)
    fam = lattice_family(rs)
    if not lattice_contains(fam.cochar, lam):
        raise PreconditionViolated("lambda is not in the cocharacter lattice", lam)
    dom, u = dominant_rep(rs, lam)
    if rs.inner(dom, rs.highest_root) <= 2 and lattice_contains(fam.coroot, dom):
        dec = decompose_orthogonal(rs, dom)
        return _conjugate(rs, u, dec.roots), "decomposition"
    dom_neg, v = dominant_rep(rs, neg(dom))
    if dom_neg == dom:
        return _conjugate(rs, u, v.letters), "orbit"
    raise NoReversor(f"-lambda is not in the Weyl orbit of {vec_to_json(lam)}",
                     {"dominant": dom, "dominant_of_negative": dom_neg})


def build_reversor(rs: RootSystem, lam: Vec) -> WeylWord:
    return reversor_with_path(rs, lam)[0]


def reversor_witness(rs: RootSystem, lam: Vec) -> Witness:
    """Reversor as a certificate, or the orbit obstruction when none exists."""
    lam = vec(lam)
    try:
        word, path = reversor_with_path(rs, lam)
    except NoReversor as exc:
        return no_reversor_witness(rs, lam, exc)
    dom = dominant_rep(rs, lam)[0]
    return Witness("Reversor", lam, word.letters, rs.inner(dom, rs.highest_root),
                   {"path": path, "image": neg(lam)})


def no_reversor_witness(rs: RootSystem, lam: Vec, exc: NoReversor) -> Witness:
    ev = exc.evidence
    return Witness("NoReversor", lam, (), rs.inner(ev["dominant"], rs.highest_root),
                   {"dominant": ev["dominant"], "dominant_of_negative": ev["dominant_of_negative"]})


# ---------------------------------------------------------------------------
# root-data forms of the three reversor statements

def _check_weights(rs: RootSystem, wts):
    if not wts:
        raise EmptyRepresentation("the weight multiset is empty")
    weight_l = lattice_family(rs).weight
    out = []
    for a, mult in wts:
        a = vec(a)
        rs.model.check(a)
        if mult < 1:
            raise PreconditionViolated("multiplicities must be positive", a)
        if not lattice_contains(weight_l, a):
            raise PreconditionViolated("not in the weight lattice", a)
        out.append((a, mult))
    return out


def semifree_rep_analysis(rs: RootSystem, lam: Vec, wts) -> WeylWord | Witness:
    """Reversor when ``lam`` acts semifreely on the weights, else the worst weight.

    The reported weight has the largest ``|<a, lam>|``; ties go to a positive
    pairing and then to the lexicographically largest weight.
    """
    lam = vec(lam)
    _require_nonzero(lam)
    wts = _check_weights(rs, wts)
    bad = [(abs(rs.inner(a, lam)), rs.inner(a, lam) > 0, a) for a, _ in wts
           if abs(rs.inner(a, lam)) > 1]
    if bad:
        _, _, a = max(bad)
        return Witness("NotSemifree", lam, (), rs.inner(a, lam), {"weight": a})
    return build_reversor(rs, lam)


def _subset(rs, members):
    ms = tuple(sorted(set(vec(r) for r in members)))
    for r in ms:
        if not rs.is_root(r):
            raise PreconditionViolated("not a root", r)
    return ms


def subalgebra_analysis(rs: RootSystem, lam: Vec, L) -> WeylWord | Witness:
    """Reversor inside the subgroup with root set ``L``, or proof that ``L`` is everything."""
    lam = vec(lam)
    rs.model.check(lam)
    _require_nonzero(lam)
    members = _subset(rs, L.members if isinstance(L, RootSubset) else L)
    mset = set(members)
    if not lattice_contains(lattice_family(rs).coroot, lam):
        raise PreconditionViolated("lambda is not in the coroot lattice", lam)
    for r in rs.roots:
        if abs(rs.inner(r, lam)) > 1 and r not in mset:
            raise PreconditionViolated(
                f"root pairs to {fmt_q(rs.inner(r, lam))} with lambda but is missing", r)
    escape = is_additively_closed(rs, members)
    if escape is not None:
        raise PreconditionViolated("subset is not closed under addition", escape[2])
    dom, u = dominant_rep(rs, lam)
    delta = rs.highest_root
    if rs.inner(dom, delta) <= 2:
        word, path = reversor_with_path(rs, lam)
        assert path == "decomposition" and all(r in mset for r in word.letters)
        return word
    # dominant frame: the subset becomes u(L)
    frame = {u.apply(r) for r in members}
    forced = set(frame) | {delta, neg(delta)}
    splits = []
    for eta in rs.roots:
        eta2 = sub(delta, eta)
        if eta < eta2 and rs.is_root(eta2):
            big = eta if rs.inner(dom, eta) > 1 else eta2
            assert rs.inner(dom, big) > 1
            forced |= {eta, neg(eta), eta2, neg(eta2)}
            splits.append([eta, eta2, big])
    inv = u.inverse()
    back = sorted(inv.apply(r) for r in forced)
    return Witness("Fullness", lam, u.letters, rs.inner(dom, delta),
                   {"forced": back, "splittings": splits,
                    "closure_size": len(_closure(rs, back)), "root_count": len(rs.roots),
                    "subset": list(members)})


def twofold_analysis(rs: RootSystem, lam: Vec, L_H) -> WeylWord | Witness:
    """Reversor, or a root outside the subgroup moved onto ``delta`` with pairing above 2."""
    lam = vec(lam)
    rs.model.check(lam)
    _require_nonzero(lam)
    members = _subset(rs, L_H.members if isinstance(L_H, RootSubset) else L_H)
    if set(members) == rs.root_set:
        raise NotProper("the subgroup contains every root")
    dom, u = dominant_rep(rs, lam)
    delta = rs.highest_root
    p = rs.inner(dom, delta)
    if p <= 2 or rs.minus_id:
        return build_reversor(rs, lam)
    outside = next(r for r in rs.roots if r not in set(members))
    image, sigma = dominant_rep(rs, outside)
    if image != delta:
        raise PreconditionViolated("outside root is not conjugate to delta", outside)
    word = u.inverse() @ sigma
    return Witness("IsotropyViolation", lam, word.letters, rs.inner(word.apply(outside), lam),
                   {"root": outside, "subgroup_roots": list(members), "image": delta})

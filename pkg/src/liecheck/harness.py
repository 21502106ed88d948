"""Sweeps over types, claims and dominant cocharacters; report rendering.

Every row of a report carries a certificate in the witness JSON form
``{kind, lambda, word, pairing, details}``, and ``recheck`` re-verifies a
row from that JSON alone (plus the type name), without reusing the code path
that produced it.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import LieCheckError, UsageError
from .lattices import (check_transversal, closed_forms, fundamental_group, lattice_family,
                       satisfies, semifree_transversal, verify_lattice_forms)
from .linalg import (Lattice, Vec, add, common_denominator, fmt_q, lattice_contains, neg,
                     parse_q, scale, vec_from_json, vec_to_json)
from .reversors import (OrthogonalDecomposition, Witness, claim_c_check, closure_from_seed,
                        decompose_orthogonal, jsonable, problems, reversor_witness, seed_set,
                        verify_claim_d)
from .roots import (RootSystem, SimpleType, WeylWord, build_root_system, default_types,
                    is_dominant)
from . import _kernels_py

CLAIMS = ("pi1", "lattices", "transversal", "a", "b", "c", "d", "reversor")
STATUSES = ("pass", "fail", "inapplicable")


# ---------------------------------------------------------------------------
# dominant enumeration

def coordinate_box(rs: RootSystem, bound) -> tuple:
    """Per-coordinate bound on dominant ``v`` with ``<v, delta> <= bound``.

    The slice is the simplex spanned by 0 and ``(bound / m_i) w_i`` (``w_i`` the
    fundamental coweights, ``m_i`` the marks), so the coordinates are extremal
    at those vertices.
    """
    dim = rs.model.dim
    box = [Fraction(0)] * dim
    for w, m in zip(rs.fundamental_coweights, rs.marks):
        for j in range(dim):
            box[j] = max(box[j], abs(w[j]) * bound / m)
    return tuple(box)


def enumerate_dominant(rs: RootSystem, lattice: Lattice, bound) -> list:
    """Dominant lattice points with ``<v, delta> <= bound``, sorted lexicographically.

    A dominant vector is ``sum c_i w_i`` with ``c_i = <alpha_i, v> >= 0``, and
    ``<v, delta> = sum c_i m_i``.  The ``c_i`` of lattice points lie in
    ``(1/d) Z`` for the common denominator ``d`` of the simple-root pairings of
    the lattice basis.
    """
    if bound < 0:
        return []
    simple = rs.simple_roots
    d = common_denominator(rs.inner(a, b) for a in simple for b in lattice.basis)
    marks = [int(m) for m in rs.marks]
    top = int(Fraction(bound) * d)
    cow = rs.fundamental_coweights
    box = coordinate_box(rs, bound)
    out = []

    def go(i, left, acc):
        if i == len(marks):
            if lattice_contains(lattice, acc):
                out.append(acc)
            return
        for k in range(left // marks[i] + 1):
            nxt = acc if k == 0 else add(acc, scale(Fraction(k, d), cow[i]))
            go(i + 1, left - k * marks[i], nxt)

    go(0, top, rs.model.zero())
    for v in out:
        assert all(abs(x) <= b for x, b in zip(v, box)), "dominant point outside coordinate box"
    return sorted(out)


# ---------------------------------------------------------------------------
# reports

@dataclass
class Case:
    system: str
    claim: str
    label: str
    status: str
    witness: dict | None
    elapsed_ms: float = 0.0
    key: tuple = ()

    @property
    def id(self) -> str:
        return f"{self.system}/{self.claim}/{self.label}" if self.label else f"{self.system}/{self.claim}"

    def to_json(self) -> dict:
        return {"id": self.id, "system": self.system, "claim": self.claim, "status": self.status,
                "witness": self.witness, "elapsed_ms": round(self.elapsed_ms, 3)}


@dataclass
class Report:
    cases: list = field(default_factory=list)

    def summary(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for c in self.cases:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary()["fail"] == 0

    def to_json(self) -> dict:
        return {"version": 1, "cases": [c.to_json() for c in self.cases], "summary": self.summary()}


def summary_line(r: Report) -> str:
    s = r.summary()
    return f"{s['pass']} pass / {s['fail']} fail / {s['inapplicable']} inapplicable"


def render_report(r: Report, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (json.dumps(r.to_json(), indent=1, sort_keys=False) + "\n").encode()
    if fmt == "text":
        lines = [f"{c.status.upper():<12} {c.id}" for c in r.cases]
        lines.append(summary_line(r))
        return ("\n".join(lines) + "\n").encode()
    raise UsageError(f"unknown report format {fmt!r}")


@dataclass
class SweepConfig:
    types: list = field(default_factory=default_types)
    claims: tuple = CLAIMS
    pairing_bound: int = 8
    claim_a_bound: int = 2
    seed: int = 0
    jobs: int = 1

    def __post_init__(self):
        self.types = [SimpleType.parse(t) if isinstance(t, str) else t for t in self.types]
        unknown = set(self.claims) - set(CLAIMS)
        if unknown:
            raise UsageError(f"unknown claims: {', '.join(sorted(unknown))}")
        if self.pairing_bound < 1 or self.claim_a_bound < 1:
            raise UsageError("bounds must be positive")


# ---------------------------------------------------------------------------
# per-claim case generators

EXPECTED_PI1 = {"B": [2], "C": [2], "E6": [3], "E7": [2], "E8": [], "F": [], "G": []}


def expected_invariant_factors(t: SimpleType) -> list:
    if t.family == "A":
        return [t.rank + 1]
    if t.family == "D":
        return [2, 2] if t.rank % 2 == 0 else [4]
    if t.family == "E":
        return EXPECTED_PI1[str(t)]
    return EXPECTED_PI1[t.family]


def _w(kind, lam=None, word=(), pairing=0, **details) -> dict:
    return {"kind": kind, "lambda": vec_to_json(lam) if lam is not None else [],
            "word": [vec_to_json(r) for r in word], "pairing": fmt_q(Fraction(pairing)),
            "details": jsonable(details)}


def _lam_key(v) -> tuple:
    return tuple(v)


def _case(rs, claim, label, status, witness, t0, key=()):
    return Case(str(rs.stype), claim, label, status, witness, (time.perf_counter() - t0) * 1000, key)


def cases_pi1(rs: RootSystem, cfg) -> list:
    t0 = time.perf_counter()
    table = fundamental_group(rs)
    got = list(table.group.invariant_factors)
    want = expected_invariant_factors(rs.stype)
    status = "pass" if got == want else "fail"
    w = _w("Pi1", invariant_factors=got, expected=want,
           representatives=[vec_to_json(v) for v in table.table_reps])
    return [_case(rs, "pi1", "", status, w, t0)]


def cases_lattices(rs: RootSystem, cfg) -> list:
    out = []
    for chk in verify_lattice_forms(rs):
        t0 = time.perf_counter()
        fam = lattice_family(rs).as_dict()
        w = _w("LatticeForm", lattice=chk.lattice, source=chk.source, detail=chk.detail,
               basis=[vec_to_json(b) for b in fam[chk.lattice].basis])
        out.append(_case(rs, "lattices", chk.lattice, "pass" if chk.passed else "fail", w, t0))
    return out


def cases_transversal(rs: RootSystem, cfg) -> list:
    t0 = time.perf_counter()
    try:
        table = semifree_transversal(rs)
    except LieCheckError as exc:
        return [_case(rs, "transversal", "", "fail", _w("Transversal", error=str(exc)), t0)]
    ok = all(r.max_pairing <= 1 for r in table.semifree_reps)
    ok = ok and all(r.max_pairing == 1 for r in table.semifree_reps if any(r.lam))
    ok = ok and all(r.source == "table" for r in table.semifree_reps)
    w = _w("Transversal", representatives=[r.to_json() for r in table.semifree_reps],
           minimal_norm=[{"coset": c, "lambda": vec_to_json(v)} for c, v in table.min_norm_reps])
    return [_case(rs, "transversal", "", "pass" if ok else "fail", w, t0)]


def cases_claim_a(rs: RootSystem, cfg) -> list:
    out = []
    coroot = lattice_family(rs).coroot
    for lam in enumerate_dominant(rs, coroot, cfg.claim_a_bound):
        if not any(lam):
            continue
        t0 = time.perf_counter()
        label = ",".join(vec_to_json(lam))
        try:
            dec = decompose_orthogonal(rs, lam)
            bad = dec.problems(rs, lam)
            w = dec.to_witness(lam).to_json()
            status = "fail" if bad else "pass"
            if bad:
                w["details"]["problems"] = bad
        except LieCheckError as exc:
            w, status = _w("OrthogonalDecomposition", lam, error=str(exc)), "fail"
        out.append(_case(rs, "a", label, status, w, t0, _lam_key(lam)))
    out.extend(cases_listed_decompositions(rs, cfg))
    return out


def listed_decompositions(rs: RootSystem) -> list:
    """Decompositions written out explicitly with the coordinate models."""
    m = rs.model
    t = str(rs.stype)
    e = m.eps
    if rs.stype.family == "C":
        n = rs.rank
        return [[(Fraction(1, 2), scale(2, m.e(i))) for i in range(1, n + 1)]]
    if t == "E6":
        r1 = add(e(1), neg(e(6)))
        r2 = add(m.epsilon(), add(e(1), add(e(2), e(6))))
        return [[(Fraction(1), r1), (Fraction(1), r2)]]
    if t == "E7":
        big = add(add(e(1), e(2)), add(e(3), e(4)))
        return [[(Fraction(1), big), (Fraction(1), add(e(1), neg(e(4))))],
                [(Fraction(1), big), (Fraction(1), add(e(1), neg(e(4)))),
                 (Fraction(1), add(e(2), neg(e(3))))]]
    if t == "E8":
        return [[(Fraction(1), add(e(1), neg(e(9)))),
                 (Fraction(1), add(add(e(1), e(2)), e(9)))]]
    return []


def cases_listed_decompositions(rs: RootSystem, cfg) -> list:
    out = []
    if not listed_decompositions(rs):
        return out
    coroot = lattice_family(rs).coroot
    enumerated = set(enumerate_dominant(rs, coroot, cfg.claim_a_bound))
    for k, terms in enumerate(listed_decompositions(rs)):
        t0 = time.perf_counter()
        dec = OrthogonalDecomposition(tuple(terms))
        lam = dec.total(rs)
        bad = dec.problems(rs, lam)
        hit = lam in enumerated
        w = dec.to_witness(lam).to_json()
        w["details"]["enumerated"] = hit
        if bad:
            w["details"]["problems"] = bad
        out.append(_case(rs, "a", f"listed-{k}", "pass" if hit and not bad else "fail", w, t0,
                         (Fraction(10 ** 9),) + (Fraction(k),)))
    return out


def cases_claim_b(rs: RootSystem, cfg) -> list:
    t0 = time.perf_counter()
    if rs.rank < 2:
        w = _w("ClaimB", reason="rank 1: the seed set is empty")
        return [_case(rs, "b", "", "inapplicable", w, t0)]
    got = closure_from_seed(rs)
    ok = set(got.members) == rs.root_set
    w = _w("ClaimB", seed=[vec_to_json(r) for r in seed_set(rs)], closure_size=len(got),
           root_count=len(rs.roots))
    return [_case(rs, "b", "", "pass" if ok else "fail", w, t0)]


def cases_claim_c(rs: RootSystem, cfg) -> list:
    if rs.minus_id:
        t0 = time.perf_counter()
        return [_case(rs, "c", "", "inapplicable", _w("ClaimC", reason="-id lies in the Weyl group"), t0)]
    out = []
    coroot = lattice_family(rs).coroot
    for lam in enumerate_dominant(rs, coroot, cfg.pairing_bound):
        if rs.inner(lam, rs.highest_root) <= 2:
            continue
        t0 = time.perf_counter()
        res = claim_c_check(rs, lam)
        if res.holds:
            w = _w("ClaimC", lam, (), res.reduced, min_fundamental_pairing=res.m,
                   fundamental_criterion=res.literal_holds,
                   certificates=[{"weight": vec_to_json(c["weight"]),
                                  "word": [vec_to_json(r) for r in c["word"]],
                                  "pairing": fmt_q(c["pairing"])} for c in res.certificates])
            status = "pass"
        else:
            w = res.violators[0].to_json()
            status = "fail"
        out.append(_case(rs, "c", ",".join(vec_to_json(lam)), status, w, t0, _lam_key(lam)))
    return out


def cases_claim_d(rs: RootSystem, cfg) -> list:
    t0 = time.perf_counter()
    only, doms = verify_claim_d(rs)
    status = "pass" if (only or rs.minus_id) else "fail"
    w = _w("ClaimD", dominant_roots=[vec_to_json(r) for r in doms], only_delta=only,
           minus_id=rs.minus_id)
    return [_case(rs, "d", "", status, w, t0)]


def reversor_sweep_points(rs: RootSystem, cfg) -> list:
    coroot = lattice_family(rs).coroot
    pts = {v for v in enumerate_dominant(rs, coroot, cfg.claim_a_bound) if any(v)}
    if rs.minus_id:
        pts |= {v for v in enumerate_dominant(rs, coroot, cfg.pairing_bound) if any(v)}
    return sorted(pts)


def cases_reversor(rs: RootSystem, cfg) -> list:
    out = []
    for lam in reversor_sweep_points(rs, cfg):
        t0 = time.perf_counter()
        wit = reversor_witness(rs, lam)
        ok = wit.kind == "Reversor" and not problems(rs, wit)
        out.append(_case(rs, "reversor", ",".join(vec_to_json(lam)), "pass" if ok else "fail",
                         wit.to_json(), t0, _lam_key(lam)))
    return out


GENERATORS = {"pi1": cases_pi1, "lattices": cases_lattices, "transversal": cases_transversal,
              "a": cases_claim_a, "b": cases_claim_b, "c": cases_claim_c, "d": cases_claim_d,
              "reversor": cases_reversor}


def _run_unit(args) -> list:
    tname, claim, cfg = args
    rs = build_root_system(tname)
    t0 = time.perf_counter()
    try:
        return GENERATORS[claim](rs, cfg)
    except LieCheckError as exc:
        return [_case(rs, claim, "error", "fail", _w("Error", error=f"{type(exc).__name__}: {exc}"), t0)]


def run_verification_suite(cfg: SweepConfig) -> Report:
    units = [(str(t), c, cfg) for t in cfg.types for c in CLAIMS if c in cfg.claims]
    if cfg.jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_run_unit, units))
    else:
        chunks = [_run_unit(u) for u in units]
    cases = [c for chunk in chunks for c in chunk]
    order = {c: i for i, c in enumerate(CLAIMS)}
    cases.sort(key=lambda c: (SimpleType.parse(c.system), order[c.claim], c.key, c.label))
    return Report(cases)


# ---------------------------------------------------------------------------
# standalone re-verification

def _v(items) -> Vec:
    return vec_from_json(items)


def recheck(case: dict) -> list[str]:
    """Re-verify one report row from its JSON; returns problems (empty when sound).

    Only ``pass`` rows are expected to be sound; the checks use brute-force
    pairings and the pure-Python kernels rather than the code that built them.
    """
    rs = build_root_system(case["system"])
    w = case["witness"]
    kind = w["kind"]
    d = w["details"]
    lam = _v(w["lambda"]) if w["lambda"] else None
    word = tuple(_v(r) for r in w["word"])
    if kind in ("Reversor", "OrthogonalDecomposition", "NotSemifree", "IsotropyViolation",
                "ClaimCViolator", "NoReversor", "Fullness"):
        det = _details_vectors(kind, d)
        return problems(rs, Witness(kind, lam, word, parse_q(w["pairing"]), det))
    if kind == "Pi1":
        from .linalg import finite_quotient
        fam = lattice_family(rs)
        got = list(finite_quotient(fam.coroot, fam.cochar).invariant_factors)
        out = [] if got == d["invariant_factors"] == d["expected"] else ["invariant factors differ"]
        try:
            check_transversal(finite_quotient(fam.coroot, fam.cochar),
                              [_v(r) for r in d["representatives"]])
        except LieCheckError as exc:
            out.append(str(exc))
        return out
    if kind == "LatticeForm":
        forms = closed_forms(rs.stype)[d["lattice"]][1]
        return [f"basis vector {b} fails the description" for b in d["basis"]
                if not satisfies(rs.model, forms, _v(b))]
    if kind == "Transversal":
        out = []
        for r in d["representatives"]:
            v = _v(r["lambda"])
            top = max(abs(rs.inner(e, v)) for e in rs.roots)
            if top != parse_q(r["max_pairing"]) or top > 1:
                out.append(f"coset {r['coset']}: brute-force maximum {fmt_q(top)}")
        return out
    if kind == "ClaimB":
        roots = list(rs.roots)
        den = common_denominator(x for r in roots for x in r)
        ints = [tuple(int(x * den) for x in r) for r in roots]
        seed = [roots.index(_v(r)) for r in d["seed"]]
        got = _kernels_py.additive_closure(ints, seed)
        return [] if len(got) == len(roots) else ["closure is not every root"]
    if kind == "ClaimC":
        out = []
        fw = list(rs.fundamental_weights)
        seen = []
        for c in d["certificates"]:
            a = _v(c["weight"])
            img = WeylWord(rs, tuple(_v(r) for r in c["word"])).apply(a)
            p = rs.inner(img, lam)
            if p != parse_q(c["pairing"]) or abs(p) <= 1:
                out.append(f"certificate for {c['weight']} does not re-verify")
            seen.append(a)
        if sorted(seen) != sorted(fw):
            out.append("certificates do not cover the fundamental weights")
        return out
    if kind == "ClaimD":
        doms = sorted((r for r in rs.roots if is_dominant(rs, r)), reverse=True)
        return [] if [vec_to_json(r) for r in doms] == d["dominant_roots"] else ["dominant roots differ"]
    return [f"no recheck for kind {kind}"]


def _details_vectors(kind: str, d: dict) -> dict:
    out = dict(d)
    for key in ("weight", "dual_weight", "root", "image", "dominant", "dominant_of_negative"):
        if key in out and isinstance(out[key], list):
            out[key] = _v(out[key])
    if kind == "IsotropyViolation":
        out["subgroup_roots"] = [_v(r) for r in d.get("subgroup_roots", [])]
    if kind == "Fullness":
        out["forced"] = [_v(r) for r in d["forced"]]
    return out

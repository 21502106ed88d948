import random
from fractions import Fraction

import pytest

from liecheck.errors import (EmptyRepresentation, Inapplicable, NoReversor, NotProper,
                             PairingTooLarge, PreconditionViolated, ZeroCocharacter)
from liecheck.harness import enumerate_dominant, listed_decompositions
from liecheck.lattices import lattice_family
from liecheck.linalg import neg
from liecheck.reversors import (OrthogonalDecomposition, Witness, additive_closure,
                                build_reversor, claim_c_check, closure_from_seed,
                                decompose_orthogonal, problems, reversor_with_path, seed_set,
                                semifree_rep_analysis, subalgebra_analysis, twofold_analysis,
                                verify_claim_b, verify_claim_d)
from liecheck.roots import WeylWord, build_root_system, dominant_rep

from conftest import ALL, SMALL

F = Fraction
H = F(1, 2)


# -- (a) -------------------------------------------------------------------

def test_decompose_examples():
    a2 = build_root_system("A2")
    assert decompose_orthogonal(a2, (1, 0, -1)).terms == ((1, (1, 0, -1)),)
    c3 = build_root_system("C3")
    dec = decompose_orthogonal(c3, (1, 1, 1))
    assert set(dec.terms) == {(H, (2, 0, 0)), (H, (0, 2, 0)), (H, (0, 0, 2))}
    with pytest.raises(PairingTooLarge):
        decompose_orthogonal(a2, (1, 1, -2))
    with pytest.raises(ZeroCocharacter):
        decompose_orthogonal(a2, (0, 0, 0))
    with pytest.raises(PreconditionViolated):
        decompose_orthogonal(a2, (-1, 0, 1))


def test_decompose_e6_listed_vector():
    rs = build_root_system("E6")
    [terms] = listed_decompositions(rs)
    listed = OrthogonalDecomposition(tuple(terms))
    lam = listed.total(rs)
    assert listed.problems(rs, lam) == []
    assert rs.inner(terms[0][1], terms[1][1]) == 0
    found = decompose_orthogonal(rs, lam)
    assert found.problems(rs, lam) == []
    assert [a for a, _ in found.terms] == [1, 1]


@pytest.mark.parametrize("t", SMALL + ["D5", "E6"])
def test_claim_a_small_types(t):
    rs = build_root_system(t)
    for lam in enumerate_dominant(rs, lattice_family(rs).coroot, 2):
        if any(lam):
            dec = decompose_orthogonal(rs, lam)
            assert dec.problems(rs, lam) == []
            w = dec.reflections(rs)
            assert w.apply(lam) == neg(lam)


def test_decomposition_problems_detect_bad_terms():
    rs = build_root_system("A2")
    bad = OrthogonalDecomposition(((1, (1, -1, 0)), (1, (0, 1, -1))))
    assert bad.problems(rs, (1, 0, -1))


# -- (b) -------------------------------------------------------------------

def test_closure_examples():
    assert len(closure_from_seed(build_root_system("A2"))) == 6
    assert len(closure_from_seed(build_root_system("G2"))) == 12
    assert len(closure_from_seed(build_root_system("A1"))) == 0
    assert set(seed_set(build_root_system("A2"))) == {(1, -1, 0), (-1, 1, 0), (0, 1, -1), (0, -1, 1)}


def test_claim_b_examples():
    assert verify_claim_b(build_root_system("A2"))
    assert verify_claim_b(build_root_system("F4"))
    assert verify_claim_b(build_root_system("E8"))
    with pytest.raises(Inapplicable):
        verify_claim_b(build_root_system("A1"))


def test_closure_monotone_and_idempotent():
    rs = build_root_system("D5")
    rng = random.Random(9)
    for _ in range(10):
        small = rng.sample(rs.roots, 3)
        big = small + rng.sample(rs.roots, 3)
        a = set(additive_closure(rs, small).members)
        b = set(additive_closure(rs, big).members)
        assert a <= b
        assert set(additive_closure(rs, a).members) == a


# -- (c) -------------------------------------------------------------------

def test_claim_c_examples():
    a2 = build_root_system("A2")
    res = claim_c_check(a2, (2, 0, -2))
    assert res.m == 2 and res.holds
    d5 = build_root_system("D5")
    res = claim_c_check(d5, (2, 1, 1, 0, 0))
    assert res.m > 1 and res.holds
    assert rs_pairing(d5, (1, 0, 0, 0, 0), (2, 1, 1, 0, 0)) == 2
    assert rs_pairing(d5, (H,) * 5, (2, 1, 1, 0, 0)) == 2


def rs_pairing(rs, a, b):
    return rs.inner(a, b)


def test_claim_c_certificates_reverify():
    rs = build_root_system("E6")
    lam = next(v for v in enumerate_dominant(rs, lattice_family(rs).coroot, 4)
               if rs.inner(v, rs.highest_root) > 2)
    res = claim_c_check(rs, lam)
    assert res.holds and len(res.certificates) == 6
    for c in res.certificates:
        img = WeylWord(rs, c["word"]).apply(c["weight"])
        assert rs.inner(img, lam) == c["pairing"] and abs(c["pairing"]) > 1


def test_claim_c_fundamental_minimum_is_only_sufficient():
    # <w_1, lam> = 1 here, yet the dual weight w_2 pairs to 2, so every weight
    # still has an orbit point pairing past 1
    a2 = build_root_system("A2")
    res = claim_c_check(a2, (1, 1, -2))
    assert res.m == 1 and not res.literal_holds
    assert res.reduced == 2 and res.holds and not res.violators


def test_claim_c_preconditions():
    with pytest.raises(Inapplicable):
        claim_c_check(build_root_system("B2"), (3, 1))
    a2 = build_root_system("A2")
    with pytest.raises(Inapplicable):
        claim_c_check(a2, (1, 0, -1))
    with pytest.raises(Inapplicable):
        claim_c_check(a2, (-2, 0, 2))


def brute_force_holds(rs, lam, orbits):
    return all(any(abs(rs.inner(x, lam)) > 1 for x in orb) for orb in orbits)


def weight_orbits(rs, bound=4):
    from liecheck.roots import weyl_orbit
    weights = enumerate_dominant(rs, lattice_family(rs).weight, bound * rs.norm_sq(rs.highest_root) / 2)
    return [weyl_orbit(rs, a) for a in weights if any(a)]


@pytest.mark.parametrize("t", ["A2", "A3"])
def test_claim_c_reduction_matches_brute_force(t):
    rs = build_root_system(t)
    orbits = weight_orbits(rs)
    for lam in enumerate_dominant(rs, lattice_family(rs).coroot, 8):
        if rs.inner(lam, rs.highest_root) > 2:
            assert claim_c_check(rs, lam).holds == brute_force_holds(rs, lam, orbits)


# -- (d) -------------------------------------------------------------------

def test_claim_d_examples():
    a2 = build_root_system("A2")
    assert verify_claim_d(a2) == (True, [(1, 0, -1)])
    assert verify_claim_d(build_root_system("B2")) == (False, [(1, 1), (1, 0)])
    e6 = build_root_system("E6")
    assert verify_claim_d(e6) == (True, [e6.highest_root])


@pytest.mark.parametrize("t", ALL)
def test_claim_d_when_minus_id_absent(t):
    rs = build_root_system(t)
    only, doms = verify_claim_d(rs)
    if not rs.minus_id:
        assert only
    assert rs.highest_root in doms


# -- reversors ---------------------------------------------------------------

def test_reversor_examples():
    a1 = build_root_system("A1")
    assert build_reversor(a1, (1, -1)).letters == ((1, -1),)
    b2 = build_root_system("B2")
    w, path = reversor_with_path(b2, (3, 1))
    assert path == "orbit" and w.apply((3, 1)) == (-3, -1)
    with pytest.raises(NoReversor) as exc:
        build_reversor(build_root_system("A2"), (1, 1, -2))
    assert exc.value.evidence == {"dominant": (1, 1, -2), "dominant_of_negative": (2, -1, -1)}
    with pytest.raises(ZeroCocharacter):
        build_reversor(a1, (0, 0))


@pytest.mark.parametrize("t", SMALL + ["D5", "E6"])
def test_reversors_on_random_cocharacters(t):
    rs = build_root_system(t)
    fam = lattice_family(rs)
    rng = random.Random(21)
    for _ in range(15):
        lam = fam.cochar.combine([rng.randint(-2, 2) for _ in range(rs.rank)])
        if not any(lam):
            continue
        try:
            w = build_reversor(rs, lam)
        except NoReversor:
            assert dominant_rep(rs, lam)[0] != dominant_rep(rs, neg(lam))[0]
            continue
        assert w.apply(lam) == neg(lam)
        assert all(rs.is_root(r) for r in w.letters)


# -- reversor statements on root data ------------------------------------------

def test_semifree_rep_examples():
    a2 = build_root_system("A2")
    eps = [(a2.model.eps(i), 1) for i in (1, 2, 3)]
    w = semifree_rep_analysis(a2, (1, 0, -1), eps)
    assert w.letters == ((1, 0, -1),)
    got = semifree_rep_analysis(a2, (1, 1, -2), [(r, 1) for r in a2.roots])
    assert isinstance(got, Witness) and got.kind == "NotSemifree"
    assert got.details["weight"] == (1, 0, -1) and got.pairing == 3 and got.verify(a2)
    a1 = build_root_system("A1")
    e1 = a1.model.eps(1)
    w = semifree_rep_analysis(a1, (1, -1), [(e1, 1), (neg(e1), 1)])
    assert w.letters == (a1.highest_root,)
    with pytest.raises(EmptyRepresentation):
        semifree_rep_analysis(a2, (1, 0, -1), [])
    with pytest.raises(ZeroCocharacter):
        semifree_rep_analysis(a2, (0, 0, 0), eps)
    with pytest.raises(PreconditionViolated):
        semifree_rep_analysis(a2, (1, 0, -1), [((H, -H, 0), 1)])


def test_subalgebra_examples():
    a2 = build_root_system("A2")
    L = [(1, 0, -1), (-1, 0, 1)]
    w = subalgebra_analysis(a2, (1, 0, -1), L)
    assert w.letters == ((1, 0, -1),) and all(r in L for r in w.letters)
    with pytest.raises(PreconditionViolated) as exc:
        subalgebra_analysis(a2, (1, 1, -2), L)
    assert exc.value.offending in {(0, 1, -1), (0, -1, 1)}
    got = subalgebra_analysis(a2, (2, 0, -2), list(a2.roots))
    assert got.kind == "Fullness" and got.verify(a2)
    with pytest.raises(PreconditionViolated):
        # contains every root pairing past 1, but not closed under addition
        subalgebra_analysis(a2, (2, 0, -2), [(1, 0, -1), (-1, 0, 1), (1, -1, 0), (-1, 1, 0),
                                             (0, 1, -1)])


def test_subalgebra_word_stays_in_subset():
    rs = build_root_system("D5")
    lam = (1, 1, 0, 0, 0)
    L = sorted({r for r in rs.roots if abs(rs.inner(r, lam)) > 1} |
               {r for r in rs.roots if rs.inner(r, lam) == 0})
    w = subalgebra_analysis(rs, lam, L)
    assert w.apply(lam) == neg(lam) and all(r in L for r in w.letters)


def test_twofold_examples():
    a2 = build_root_system("A2")
    LH = [(0, 1, -1), (0, -1, 1)]
    w = twofold_analysis(a2, (1, 0, -1), LH)
    assert w.apply((1, 0, -1)) == (-1, 0, 1)
    got = twofold_analysis(a2, (2, 1, -3), LH)
    assert got.kind == "IsotropyViolation" and got.pairing == 5 and got.verify(a2)
    b2 = build_root_system("B2")
    w = twofold_analysis(b2, (2, 1), [(1, 0), (-1, 0)])
    assert w.apply((2, 1)) == (-2, -1)
    with pytest.raises(NotProper):
        twofold_analysis(a2, (1, 0, -1), list(a2.roots))


def test_twofold_violation_from_nondominant_lambda():
    a2 = build_root_system("A2")
    lam = (-3, 1, 2)
    got = twofold_analysis(a2, lam, [(1, -1, 0), (-1, 1, 0)])
    assert got.kind == "IsotropyViolation" and got.verify(a2)
    assert got.pairing == a2.inner(dominant_rep(a2, lam)[0], a2.highest_root)


def test_witness_json_and_tamper_detection():
    a2 = build_root_system("A2")
    got = semifree_rep_analysis(a2, (1, 1, -2), [(r, 1) for r in a2.roots])
    js = got.to_json()
    assert set(js) == {"kind", "lambda", "word", "pairing", "details"}
    assert js["pairing"] == "3" and js["lambda"] == ["1", "1", "-2"]
    forged = Witness(got.kind, got.lam, got.word, F(2), got.details)
    assert problems(a2, forged)
    bogus = Witness("Reversor", (1, 0, -1), ((1, -1, 0),), F(2), {})
    assert problems(a2, bogus)

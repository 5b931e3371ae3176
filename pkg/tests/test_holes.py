from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from momentroot.decide import decide_root
from momentroot.exact import Radical, UsageError, radical_compare
from momentroot.holes import (
    check_root_order_membership,
    check_top_of_support,
    check_hole_forward,
    check_hole_backward,
    check_lower_support,
    check_iota_hole_criteria,
    ordering_report,
    kappa_dependence_scan,
    iota_dagger_relations,
    iota_relations,
    iota_star_witness,
    triple_params,
)
from momentroot.measures import AtomicMeasure, find_holes, kappa_power_measure


def measure(*pairs):
    return AtomicMeasure.from_pairs([(F(p), F(w)) for p, w in pairs])


small_fraction = st.fractions(min_value=F(1, 32), max_value=32, max_denominator=64)

triples = (
    st.lists(small_fraction, min_size=3, max_size=3, unique=True)
    .map(sorted)
    .map(tuple)
)


@st.composite
def measures(draw, max_atoms=4):
    n = draw(st.integers(min_value=1, max_value=max_atoms))
    points = draw(st.lists(small_fraction, min_size=n, max_size=n, unique=True))
    weights = draw(st.lists(small_fraction, min_size=n, max_size=n))
    return AtomicMeasure.from_pairs(zip(points, weights))


# ---------------------------------------------------------------------------
# triple parameters
# ---------------------------------------------------------------------------


def test_triple_params_half_one_nine():
    p = triple_params(F(1, 2), 1, 9, 2)
    assert p.alpha.to_rational() == F(1, 6)
    assert p.alpha_dag.to_rational() == F(1, 3)
    assert p.beta.to_rational() == 1
    assert p.beta_dag.to_rational() is None  # sqrt(1/2)
    assert p.beta_dag.power == F(1, 2)
    assert p.gamma.to_rational() == 3
    assert (p.iota_s, p.iota_s_star) == (2, 4)


def test_triple_params_one_two_four():
    p = triple_params(1, 2, 4, 2)
    assert p.alpha.to_rational() == F(1, 2)
    assert p.alpha_dag.to_rational() == 1
    assert p.beta_dag.to_rational() == 1
    assert radical_compare(p.alpha_dag, p.beta_dag) == 0
    assert p.beta.to_rational() is None and p.beta.power == 2
    assert p.gamma.to_rational() == 2
    assert (p.iota_s, p.iota_s_star) == (3, 2)


def test_triple_params_one_four_256():
    p = triple_params(1, 4, 256, 2)
    assert p.alpha.to_rational() == F(1, 16)
    assert p.alpha_dag.to_rational() == F(1, 4)
    assert p.beta.to_rational() == 2
    assert p.beta_dag.to_rational() == 1
    assert p.gamma.to_rational() == 16
    assert (p.iota_s, p.iota_s_star) == (2, 4)


def test_triple_params_undefined_iotas():
    p = triple_params(0, 1, 2, 2)
    assert p.iota_s is None and p.iota_s_star is None
    assert p.alpha.is_zero() and p.beta_dag.is_zero()
    q = triple_params(1, 2, 2, 3)
    assert q.iota_s is None and q.iota_s_star is None


def test_triple_params_rejects_bad_order():
    with pytest.raises(UsageError):
        triple_params(2, 1, 9, 2)
    with pytest.raises(UsageError):
        triple_params(1, 1, 9, 2)
    with pytest.raises(UsageError):
        triple_params(1, 2, 4, 17)


@given(triples, st.integers(min_value=2, max_value=8))
@settings(max_examples=80, deadline=None)
def test_endpoint_ordering_always_holds(triple, kappa):
    report = ordering_report(triple_params(*triple, kappa))
    assert report.ok, report.to_dict()


# ---------------------------------------------------------------------------
# iota relations and witnesses
# ---------------------------------------------------------------------------


def test_iota_relations_examples():
    r = iota_relations(F(1, 2), 1, 9)
    assert r.data["iota_s"] == 2 and r.data["iota_s_star"] == 4
    assert r.ok

    r = iota_relations(1, 2, 4)
    claims = {c.name: c for c in r.claims}
    assert r.data["iota_s"] == 3 and r.data["iota_s_star"] == 2
    assert claims["(iii)"].holds  # both sides of the equivalence hold
    assert r.ok

    r = iota_relations(1, 4, 8)
    assert r.data["iota_s_star"] == 1
    assert {c.name: c for c in r.claims}["(v)"].holds
    assert r.ok


@given(triples)
@settings(max_examples=150, deadline=None)
def test_iota_relations_never_violated(triple):
    assert iota_relations(*triple).ok


@given(triples, st.fractions(min_value=F(1, 16), max_value=16, max_denominator=32))
@settings(max_examples=60, deadline=None)
def test_iotas_are_scale_invariant(triple, t):
    base = iota_relations(*triple).data
    scaled = iota_relations(*(t * x for x in triple)).data
    assert base["iota_s"] == scaled["iota_s"]
    assert base["iota_s_star"] == scaled["iota_s_star"]


@given(triples, st.integers(min_value=2, max_value=8))
@settings(max_examples=150, deadline=None)
def test_iota_dagger_relations_never_violated(triple, kappa):
    assert iota_dagger_relations(*triple, kappa).ok


def test_iota_star_witness_examples():
    assert iota_star_witness(2) == (F(1, 32), F(1, 8), 1)
    assert iota_star_witness(3) == (F(1, 128), F(1, 32), 1)
    assert iota_star_witness(5) == (F(1, 2 ** 11), F(1, 2 ** 9), 1)


def test_iota_star_witness_range():
    for p in range(2, 11):
        t1, t2, t3 = iota_star_witness(p)
        r = iota_relations(t1, t2, t3)
        assert r.data["iota_s"] == 2
        assert r.data["iota_s_star"] == p
    with pytest.raises(UsageError):
        iota_star_witness(1)
    with pytest.raises(UsageError):
        iota_star_witness(65)


# ---------------------------------------------------------------------------
# kappa-dependence scan
# ---------------------------------------------------------------------------


def test_kappa_scan_exact_items_on_half_one_nine():
    r = kappa_dependence_scan(F(1, 2), 1, 9, 50)
    claims = {c.name: c for c in r.claims}
    assert claims["(iii) persistence"].holds
    assert claims["(iv) crossing at iota_s"].holds
    assert not claims["(iii) persistence"].approximate
    # theta1 <= 1 branch: the difference grows strictly from iota_s on
    assert claims["(v) difference growth"].hypotheses_hold
    assert claims["(v) difference growth"].holds
    assert claims["(v) difference growth"].approximate
    assert r.data["difference_trend"] == "strictly_increasing"
    assert r.ok


def test_kappa_scan_decreasing_instance():
    r = kappa_dependence_scan(2, F(5, 2), 2 * 10 ** 4, 12, precision=256)
    claims = {c.name: c for c in r.claims}
    assert not claims["(v) difference growth"].hypotheses_hold
    assert r.data["difference_trend"] == "strictly_decreasing"
    assert r.data["difference_min_gap"] > F(1, 2 ** 100)
    assert r.ok


def test_kappa_scan_limits_are_monotone():
    r = kappa_dependence_scan(F(1, 2), 1, 9, 30)
    claims = {c.name: c for c in r.claims}
    assert claims["(i) alpha_dag limit"].holds
    assert claims["(ii) beta_dag limit"].holds


def test_kappa_scan_growth_branch_above_one():
    # theta1 > 1 with theta1^q <= theta3^p for theta2/theta3 = p/q: the
    # growth hypothesis holds through its second branch
    r = kappa_dependence_scan(2, 8, 16, 12)
    claims = {c.name: c for c in r.claims}
    growth = claims["(v) difference growth"]
    assert growth.hypotheses_hold
    assert growth.holds
    assert r.data["difference_trend"] == "strictly_increasing"
    assert r.ok


def test_kappa_scan_range_validation():
    with pytest.raises(UsageError):
        kappa_dependence_scan(F(1, 2), 1, 9, 1)
    with pytest.raises(UsageError):
        kappa_dependence_scan(F(1, 2), 1, 9, 201)


def test_kappa_scan_at_the_200_cap():
    r = kappa_dependence_scan(F(1, 2), 1, 9, 200)
    assert r.ok
    assert len(r.data["differences"]) == 199  # iota_s = 2 up to 200


def test_kappa_scan_small_theta3_limit():
    # theta3 < 1: theta3**(1/k) climbs toward 1, approach stays monotone
    r = kappa_dependence_scan(F(1, 8), F(1, 4), F(1, 2), 12)
    claims = {c.name: c for c in r.claims}
    assert claims["(i) alpha_dag limit"].holds
    assert claims["(ii) beta_dag limit"].holds
    assert r.ok


@given(triples, st.integers(min_value=6, max_value=12))
@settings(max_examples=20, deadline=None)
def test_kappa_scan_exact_claims_never_violated(triple, kappa_max):
    r = iota_relations(*triple)
    kappa_max = max(kappa_max, r.data["iota_s"])  # scan must reach iota_s
    if kappa_max > 200:
        return  # outside the scan's supported range
    r = kappa_dependence_scan(*triple, kappa_max, precision=96)
    claims = {c.name: c for c in r.claims}
    assert claims["(iii) persistence"].holds
    assert claims["(iv) crossing at iota_s"].holds is not False


# ---------------------------------------------------------------------------
# hole transfer nu -> mu
# ---------------------------------------------------------------------------


def test_hole_forward_two_diracs():
    report = check_hole_forward(measure((1, 1), (2, 1)), 1, 2, 2)
    assert report.applicable and report.ok
    assert all(c.holds for c in report.claims)
    assert report.data["theta1"].to_rational() == 2
    assert report.data["theta2"].to_rational() == 4
    assert report.data["theta3"].to_rational() == 4


def test_hole_forward_top_hole():
    nu = measure((F(1, 2), 1), (1, 1))
    report = check_hole_forward(nu, F(1, 2), 1, 2)
    assert report.applicable and report.ok
    assert report.data["theta1"].to_rational() == F(1, 2)
    assert report.data["theta2"].to_rational() == 1
    mu = kappa_power_measure(nu, 2)
    assert mu == measure((F(1, 4), 1), (F(1, 2), 2), (1, 1))
    assert mu.mass_open(F(1, 2), 1) == 0


def test_hole_forward_inapplicable_interval_is_reported():
    # (alpha, beta) = (1/4, 2) over supp nu = {1/2, 1}: not a nu-hole
    report = check_hole_forward(measure((F(1, 2), 1), (1, 1)), F(1, 4), F(3, 4), 2)
    assert not report.applicable
    assert all(c.holds is None for c in report.claims)


def test_hole_forward_radical_endpoints():
    # irrational hole endpoints strictly between the atoms of nu
    nu = measure((1, 1), (4, 1))
    report = check_hole_forward(nu, Radical.root(2, 2), Radical.root(8, 2), 2)
    assert report.applicable
    assert report.ok
    assert report.data["theta1"].to_rational() is None  # theta1 = 4*sqrt(2)
    assert report.data["theta2"].to_rational() == 8


def test_hole_forward_canonicalize_preserves_preconditions():
    nu = measure((1, 1), (4, 1))
    report = check_hole_forward(nu, Radical.root(2, 2), Radical.root(8, 2), 2, canonicalize=True)
    assert report.applicable and report.ok
    assert report.data["theta1"].to_rational() == 4  # endpoints snapped to 1, 4


@given(measures(), st.sampled_from([2, 3]))
@settings(max_examples=40, deadline=None)
def test_hole_forward_fuzz_all_holes(nu, kappa):
    for hole in find_holes(nu):
        base = check_hole_forward(nu, hole.lower, hole.upper, kappa)
        assert base.ok, base.to_dict()
        canonical = check_hole_forward(nu, hole.lower, hole.upper, kappa, canonicalize=True)
        assert canonical.ok, canonical.to_dict()
        if base.applicable:
            # canonicalized endpoints keep the preconditions
            assert canonical.applicable


# ---------------------------------------------------------------------------
# hole transfer mu -> nu
# ---------------------------------------------------------------------------


def test_hole_backward_square_of_two_diracs():
    nu = measure((F(1, 8), 1), (1, 1))
    mu = kappa_power_measure(nu, 2)
    assert mu == measure((F(1, 64), 1), (F(1, 8), 2), (1, 1))
    report = check_hole_backward(mu, F(1, 8), 1, 2, nu)
    claims = {c.name: c for c in report.claims}
    assert claims["(iii-a)"].hypotheses_hold  # beta_dag < alpha_dag
    assert claims["(iii-a)"].holds
    assert report.ok


def test_hole_backward_rejects_non_hole():
    nu = measure((1, 1), (2, 1))
    mu = kappa_power_measure(nu, 2)
    with pytest.raises(UsageError):
        check_hole_backward(mu, F(3, 2), 3, 2, nu)


def test_hole_backward_rejects_uncertified_root():
    nu = measure((1, 1), (2, 1))
    mu = kappa_power_measure(nu, 2)
    with pytest.raises(UsageError):
        check_hole_backward(mu, 1, 2, 2, measure((1, 1), (3, 1)))


def test_hole_backward_accepts_nu_representation():
    nu = measure((F(1, 8), 1), (1, 1))
    mu = kappa_power_measure(nu, 2)
    d = decide_root(mu, 2)
    report = check_hole_backward(mu, F(1, 8), 1, 2, d.nu)
    assert report.ok


def test_hole_backward_hole_above_support_top():
    # theta2 beyond sup supp mu: only part (i) stays applicable
    mu = measure((1, 1))
    report = check_hole_backward(mu, 2, 3, 2, measure((1, 1)))
    claims = {c.name: c for c in report.claims}
    assert claims["(i)"].hypotheses_hold and claims["(i)"].holds
    assert not claims["(ii)"].hypotheses_hold
    assert not claims["(iii-a)"].hypotheses_hold
    assert report.ok


# ---------------------------------------------------------------------------
# iota hole criteria
# ---------------------------------------------------------------------------


def test_iota_criteria_condition_iii_fires():
    nu = measure((F(1, 8), 1), (1, 1), (2, 1))
    mu = kappa_power_measure(nu, 2)
    report = check_iota_hole_criteria(mu, F(1, 4), 1, 2, nu)
    claims = {c.name: c for c in report.claims}
    assert report.data["iota_s"] == 3
    assert claims["(iii)"].hypotheses_hold
    assert claims["(iii)"].holds
    assert report.ok


def test_iota_criteria_condition_iv_fires():
    nu = measure((F(1, 32), 1), (1, 1), (2, 1))
    mu = kappa_power_measure(nu, 2)
    report = check_iota_hole_criteria(mu, F(1, 16), 1, 2, nu)
    claims = {c.name: c for c in report.claims}
    assert report.data["iota_s"] == 4
    assert claims["(iv)"].hypotheses_hold
    assert claims["(iv)"].holds
    assert report.ok


def test_iota_criteria_not_applicable_at_top():
    nu = measure((F(1, 8), 1), (1, 1))
    mu = kappa_power_measure(nu, 2)
    report = check_iota_hole_criteria(mu, F(1, 8), 1, 2, nu)  # theta2 == sup supp mu
    assert not report.applicable


# ---------------------------------------------------------------------------
# corollary checkers
# ---------------------------------------------------------------------------


def test_top_of_support_biconditional():
    report = check_top_of_support(measure((F(1, 2), 1), (1, 1)), 2, F(1, 2), 1, 1)
    claims = {c.name: c for c in report.claims}
    assert report.data["cond_a"] and report.data["cond_b"]
    assert claims["(iv)"].holds
    assert report.ok


def test_top_of_support_double_hole():
    report = check_top_of_support(measure((1, 1), (2, 1)), 2, 1, 2, 4)
    claims = {c.name: c for c in report.claims}
    assert claims["(i)"].hypotheses_hold and claims["(i)"].holds
    assert report.ok


def test_top_of_support_single_atom_both_sides_false():
    report = check_top_of_support(measure((1, 1)), 2, F(1, 2), 1, 1)
    claims = {c.name: c for c in report.claims}
    assert not report.data["cond_a"] and not report.data["cond_b"]
    assert claims["(iv)"].holds
    assert report.ok


def test_lower_support_examples():
    report = check_lower_support(measure((2, 1), (3, 1)), 2)
    assert report.ok and all(c.holds for c in report.claims)
    assert report.data["min_mu"] == 4

    report = check_lower_support(measure((F(5, 7), F(2, 3))), 3)
    assert report.ok
    assert report.data["min_mu"] == F(125, 343)

    nu = measure((F(1, 6), 1), (F(1, 3), 1), (1, 1), (3, 1))
    report = check_lower_support(nu, 2)
    assert report.ok
    assert report.data["min_mu"] == F(1, 36)


def test_order_membership_not_applicable_at_top():
    nu = measure((F(1, 8), 1), (1, 1))
    mu = kappa_power_measure(nu, 2)
    report = check_root_order_membership(mu, F(1, 8), 1, 4)
    assert not report.applicable


def test_order_membership_needs_iota_star_one():
    nu = measure((F(1, 8), 1), (1, 1), (2, 1))
    mu = kappa_power_measure(nu, 2)
    report = check_root_order_membership(mu, F(1, 4), 1, 4)
    assert not report.applicable
    assert report.data["iota_s_star"] == 2


def test_order_membership_mixed_orders():
    nu4 = measure((F(1, 2 ** 33), 1), (1, 1), (8, 1))
    mu = kappa_power_measure(nu4, 4)
    report = check_root_order_membership(mu, F(1, 2 ** 24), 1, 4)
    assert report.applicable and report.ok
    assert report.data["J"] == [2, 4]


# ---------------------------------------------------------------------------
# zero-counterexample sweep over generated instances
# ---------------------------------------------------------------------------


@given(measures(max_atoms=4), st.sampled_from([2, 3]))
@settings(max_examples=25, deadline=None)
def test_checkers_find_no_counterexamples(nu, kappa):
    mu = kappa_power_measure(nu, kappa)
    assert check_lower_support(nu, kappa).ok
    for hole in find_holes(mu):
        if hole.leading:
            continue
        assert check_hole_backward(mu, hole.lower, hole.upper, kappa, nu).ok
        assert check_iota_hole_criteria(mu, hole.lower, hole.upper, kappa, nu).ok
        if 0 < hole.lower and hole.upper < mu.max_point:
            assert check_root_order_membership(mu, hole.lower, hole.upper, 4).ok

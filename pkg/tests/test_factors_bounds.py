"""Factor catalog values, lower bounds, ledger, and the netext table."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from netext import (
    BoundsError,
    FactorKind,
    Factorization,
    HALF,
    HalfInt,
    bridge_lower,
    brunnian_lower,
    classify_by_netext,
    curve_0_2,
    curve_1_1,
    curve_2_0,
    distribution_check,
    equality_ledger,
    generic_graph,
    generic_knot,
    hopf_graph,
    hopf_slinky,
    lens_core,
    morimoto_lower,
    netext_lower,
    propeller_knot,
    trivial_theta,
    trivial_two_bouquet,
    tunnel_lower,
    tunnel_lower_int,
)


def _oracle_netext_lower(factors) -> Fraction:
    """Independent evaluation of the additivity bound with Fraction arithmetic."""
    total = Fraction(1, 2)
    for f in factors:
        ne = Fraction(f.netext_infinity.doubled, 2)
        total += ne - Fraction(1, 2) if f.is_genus2_graph else ne
    return total


def as_fraction(h: HalfInt) -> Fraction:
    return Fraction(h.doubled, 2)


# --- factor records ----------------------------------------------------------


def test_catalog_netext_values():
    assert lens_core().netext_infinity == 0
    assert trivial_theta().netext_infinity == HALF
    assert hopf_graph().netext_infinity == HALF
    for f in (
        trivial_two_bouquet(),
        curve_0_2(),
        curve_1_1(True),
        curve_2_0(),
        hopf_slinky(4),
        propeller_knot(),
    ):
        assert f.netext_infinity == 1


def test_factor_guards():
    with pytest.raises(ValueError):
        hopf_slinky(3)
    with pytest.raises(ValueError):
        hopf_slinky(0)
    with pytest.raises(ValueError):
        generic_knot(HALF)
    with pytest.raises(ValueError):
        generic_graph(-1)
    with pytest.raises(ValueError):
        Factorization.of(trivial_theta(), trivial_two_bouquet())


def test_slinky_length_window():
    assert hopf_slinky(4).slinky_consistent_with(2)
    assert hopf_slinky(4).slinky_consistent_with(3)
    assert not hopf_slinky(10).slinky_consistent_with(2)


def test_derived_counts():
    f = Factorization.of(
        trivial_theta(), hopf_graph(), curve_1_1(), curve_0_2(True), lens_core()
    )
    assert f.n == 5
    assert f.m_tunnel == 1  # only the (1,1) graph
    assert f.m_bridge == 2  # the Hopf graph counts here
    assert f.k_tunnel == 1  # the (0,2) knot; the core is excluded
    assert f.k_all == 2
    assert f.p3 == 2  # three genus-2 graph factors


# --- netext lower bound -------------------------------------------------------


def test_netext_lower_examples():
    f = Factorization.of(*[curve_1_1()] * 3)
    assert netext_lower(f).value == 2
    assert as_fraction(netext_lower(f).value) == _oracle_netext_lower(f.factors)

    f = Factorization.of(trivial_theta(), generic_knot(1))
    assert as_fraction(netext_lower(f).value) == _oracle_netext_lower(f.factors)
    assert netext_lower(f).value == HalfInt(3)  # 1/2 + (1/2 - 1/2) + 1

    f = Factorization.of(hopf_graph(), lens_core())
    assert netext_lower(f).value == HALF


def test_netext_lower_needs_graph_factor():
    with pytest.raises(BoundsError):
        netext_lower(Factorization.of(generic_knot(1), generic_knot(2)))


def test_netext_lower_matches_oracle_on_random_catalogs():
    rng = random.Random(11)
    pool = [
        trivial_theta(),
        trivial_two_bouquet(),
        hopf_graph(),
        lens_core(),
        curve_0_2(),
        curve_0_2(True),
        curve_1_1(),
        curve_1_1(True),
        curve_2_0(),
        curve_2_0(True),
        hopf_slinky(2),
        hopf_slinky(4, True),
        propeller_knot(),
        generic_graph("5/2"),
        generic_knot(3),
    ]
    for _ in range(300):
        chosen = [rng.choice(pool) for _ in range(rng.randint(1, 7))]
        if sum(1 for x in chosen if x.kind in (FactorKind.TRIVIAL_THETA, FactorKind.TRIVIAL_TWO_BOUQUET)) > 1:
            continue
        if not any(x.is_genus2_graph for x in chosen):
            continue
        f = Factorization(tuple(chosen))
        assert as_fraction(netext_lower(f).value) == _oracle_netext_lower(chosen)


# --- tunnel and bridge bounds --------------------------------------------------


def test_tunnel_lower_examples():
    assert tunnel_lower(Factorization.of(*[curve_1_1()] * 3)).value == 1
    assert tunnel_lower(Factorization.of(curve_1_1(), generic_knot(1))).value == 1
    for n in (1, 2, 3):
        f = Factorization.of(*[curve_1_1()] * (2 * n + 1))
        assert tunnel_lower(f).value == n


def test_tunnel_parity_and_ceiling():
    f = Factorization.of(trivial_theta(), generic_knot(1))  # m = 0
    assert tunnel_lower(f).value == HalfInt(1)
    assert tunnel_lower_int(f) == 1
    f = Factorization.of(curve_1_1(), curve_1_1())  # m = 2
    assert not tunnel_lower(f).value.is_integer()
    assert tunnel_lower_int(f) == 1


def test_tunnel_bound_integer_iff_m_odd():
    rng = random.Random(13)
    pool = [curve_1_1(), curve_2_0(), hopf_graph(), trivial_theta(), curve_0_2(True), lens_core()]
    for _ in range(200):
        chosen = [rng.choice(pool) for _ in range(rng.randint(2, 6))]
        if sum(1 for x in chosen if x.kind is FactorKind.TRIVIAL_THETA) > 1:
            continue
        f = Factorization(tuple(chosen))
        assert tunnel_lower(f).value.is_integer() == (f.m_tunnel % 2 == 1)


def test_tunnel_netext_cross_check():
    # when every graph factor has catalog value 1 and every counted knot has
    # value 1, the tunnel bound is the netext bound minus one
    rng = random.Random(17)
    pool = [curve_0_2(), curve_1_1(), curve_2_0(), hopf_slinky(2), trivial_two_bouquet(),
            curve_0_2(True), curve_1_1(True), propeller_knot()]
    for _ in range(200):
        chosen = [rng.choice(pool) for _ in range(rng.randint(2, 6))]
        if sum(1 for x in chosen if x.kind is FactorKind.TRIVIAL_TWO_BOUQUET) > 1:
            continue
        if not any(x.is_genus2_graph for x in chosen):
            continue
        f = Factorization(tuple(chosen))
        assert tunnel_lower(f).value == netext_lower(f).value - 1


def test_bridge_lower_examples():
    b = bridge_lower(Factorization.of(curve_0_2(), curve_0_2()))
    assert b.value == HalfInt(5)
    assert b.equality_eligible

    b = bridge_lower(Factorization.of(curve_1_1(), curve_0_2()))
    assert b.value == HalfInt(5)
    assert not b.equality_eligible

    b = bridge_lower(Factorization.of(curve_1_1(), generic_knot(1)))
    assert b.value == 3


def test_bridge_counts_hopf_graphs():
    b = bridge_lower(Factorization.of(hopf_graph(), curve_0_2()))
    assert b.value == HalfInt(5)  # m_bridge = 2


def test_bridge_rejects_lens_cores():
    with pytest.raises(BoundsError):
        bridge_lower(Factorization.of(curve_1_1(), lens_core()))


def test_brunnian_examples():
    assert brunnian_lower(1) == brunnian_lower(1)
    b = brunnian_lower(1)
    assert b.tunnel == 1 and b.bridge == HalfInt(5)
    assert brunnian_lower(2).bridge == HalfInt(7)
    assert brunnian_lower(5) == type(b)(5, HalfInt(13))
    with pytest.raises(BoundsError):
        brunnian_lower(0)


def test_morimoto_examples():
    assert morimoto_lower([1, 1]) == 2
    assert morimoto_lower([0, 0, 1]) == 1
    assert morimoto_lower([2, 1, 0, 3]) == 6
    with pytest.raises(BoundsError):
        morimoto_lower([-1])


# --- ledger and distribution ---------------------------------------------------


def test_ledger_examples():
    r = equality_ledger(Factorization.of(*[curve_1_1()] * 3))
    assert (r.lhs, r.rhs, r.feasible) == (3, 3, True)
    assert r.tight

    r = equality_ledger(Factorization.of(curve_2_0(), curve_2_0()))
    assert (r.lhs, r.rhs, r.feasible) == (6, 3, False)

    r = equality_ledger(Factorization.of(hopf_slinky(2), curve_0_2()))
    assert (r.lhs, r.rhs, r.feasible) == (3, 4, True)


def test_ledger_rejects_generic():
    with pytest.raises(BoundsError):
        equality_ledger(Factorization.of(curve_1_1(), generic_knot(1)))


def test_ledger_monotonicity_in_curve_0_2():
    rng = random.Random(23)
    from netext.searches import catalog_kinds

    pool = catalog_kinds(max_slinky_length=6)
    for _ in range(200):
        chosen = [rng.choice(pool) for _ in range(rng.randint(2, 6))]
        trivials = sum(
            1
            for x in chosen
            if x.kind in (FactorKind.TRIVIAL_THETA, FactorKind.TRIVIAL_TWO_BOUQUET)
        )
        if trivials > 1:
            continue
        base = equality_ledger(Factorization(tuple(chosen)))
        extended = equality_ledger(Factorization(tuple(chosen) + (curve_0_2(),)))
        assert extended.rhs - extended.lhs >= base.rhs - base.lhs
        with_prop = equality_ledger(Factorization(tuple(chosen) + (propeller_knot(),)))
        assert (with_prop.rhs - with_prop.lhs) == (base.rhs - base.lhs) - 4


def test_distribution_examples():
    report = distribution_check(Factorization.of(*[curve_1_1()] * 3))
    assert report.applicable and report.checks is not None
    assert report.checks[2]  # count 0 >= (3-3)/3
    assert report.counts is not None and report.counts[2] == 0

    report = distribution_check(Factorization.of(curve_2_0(), curve_2_0()))
    assert not report.applicable and report.checks is None


# --- netext classification table -----------------------------------------------


def test_classify_by_netext_table():
    r = classify_by_netext(HALF, is_knot=False)
    assert r.kinds == {FactorKind.TRIVIAL_THETA, FactorKind.HOPF_GRAPH}

    r = classify_by_netext(HalfInt.whole(1), is_knot=True)
    assert FactorKind.PROPELLER_KNOT in r.kinds
    assert FactorKind.LENS_CORE in r.kinds and r.notes  # flagged caveat

    r = classify_by_netext(HalfInt.whole(0), is_knot=True)
    assert r.kinds == {FactorKind.LENS_CORE}
    assert any("trivial knot" in note for note in r.notes)

    r = classify_by_netext(HalfInt.whole(1), is_knot=False)
    assert r.kinds == {
        FactorKind.CURVE_0_2,
        FactorKind.CURVE_1_1,
        FactorKind.CURVE_2_0,
        FactorKind.HOPF_SLINKY,
        FactorKind.TRIVIAL_TWO_BOUQUET,
    }


def test_classify_by_netext_range_guard():
    with pytest.raises(BoundsError):
        classify_by_netext(HalfInt(3), is_knot=False)
    with pytest.raises(BoundsError):
        classify_by_netext(HalfInt.whole(2), is_knot=True)

"""Multiset searches: the tight vertex-sum catalog and the distribution sweep."""

from __future__ import annotations

import os
from unittest import mock

from netext import (
    FactorKind,
    distribution_check,
    equality_ledger,
    iter_feasible_multisets,
    tunnel_tight_theta_multisets,
)
from netext.searches import catalog_kinds, count_feasible_multisets


def test_tight_search_small():
    results = tunnel_tight_theta_multisets(6)
    assert len(results) == 1
    f = results[0]
    assert f.n == 3
    assert all(
        x.kind is FactorKind.CURVE_1_1 and not x.is_knot for x in f.factors
    )


def test_tight_multiset_ledger_is_tight():
    [f] = tunnel_tight_theta_multisets(6)
    ledger = equality_ledger(f)
    assert ledger.tight


def test_feasible_iterator_respects_bounds():
    for f in iter_feasible_multisets(2, 4, catalog_kinds(max_slinky_length=4)):
        assert 2 <= f.n <= 4
        assert equality_ledger(f).feasible


def test_feasible_multisets_all_pass_distribution_small():
    checked = 0
    for f in iter_feasible_multisets(2, 5):
        report = distribution_check(f)
        assert report.all_hold(), str(f)
        checked += 1
    assert checked > 100


def test_pruning_loses_nothing():
    # brute-force reference on a small alphabet and small n
    import itertools

    from netext import Factorization

    alphabet = catalog_kinds(max_slinky_length=4)
    brute = set()
    for n in (2, 3):
        for combo in itertools.combinations_with_replacement(range(len(alphabet)), n):
            factors = tuple(alphabet[i] for i in combo)
            trivial = sum(
                1
                for f in factors
                if f.kind in (FactorKind.TRIVIAL_THETA, FactorKind.TRIVIAL_TWO_BOUQUET)
            )
            if trivial > 1:
                continue
            f = Factorization(factors)
            if equality_ledger(f).feasible:
                brute.add(tuple(str(x) for x in factors))
    pruned = {
        tuple(str(x) for x in f.factors)
        for f in iter_feasible_multisets(2, 3, alphabet)
    }
    assert pruned == brute


def test_thread_env_does_not_change_results():
    base = [str(f) for f in tunnel_tight_theta_multisets(6)]
    with mock.patch.dict(os.environ, {"NETEXT_THREADS": "4"}):
        threaded = [str(f) for f in tunnel_tight_theta_multisets(6)]
        from netext.searches import distribution_counterexamples

        assert distribution_counterexamples(4) == []
    assert base == threaded


def test_count_is_stable():
    assert count_feasible_multisets(4) == count_feasible_multisets(4)

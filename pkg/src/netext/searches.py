"""Exhaustive searches over catalog factor multisets.

Two re-derivations run here:

* the tunnel-tight vertex-sum search: among theta-compatible multisets with
  no knots, no (0,2)-curves and no trivial theta, only one multiset with at
  most eight factors is ledger-feasible with the parity the tunnel bound
  needs, namely three (1,1)-curve graphs;
* the distribution sweep: every ledger-feasible catalog multiset with 2..8
  factors satisfies all three factor-proportion inequalities.

Set NETEXT_THREADS to split the outermost branching across a thread pool;
results are merged and sorted, so output is identical either way.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, Sequence

from .bounds import distribution_check, equality_ledger
from .factors import (
    Factor,
    FactorKind,
    Factorization,
    curve_0_2,
    curve_1_1,
    curve_2_0,
    hopf_graph,
    hopf_slinky,
    lens_core,
    propeller_knot,
    trivial_theta,
    trivial_two_bouquet,
)

# Largest slinky length that can appear in a feasible multiset of <= 8
# factors: the right side of the ledger maxes out at 3 + 2*7 = 17.
_MAX_SLINKY_LENGTH = 16


def catalog_kinds(max_slinky_length: int = _MAX_SLINKY_LENGTH) -> list[Factor]:
    """The full catalog alphabet with slinky lengths spelled out."""
    kinds: list[Factor] = [
        trivial_theta(),
        trivial_two_bouquet(),
        hopf_graph(),
        curve_0_2(False),
        curve_1_1(False),
        curve_2_0(False),
        lens_core(),
        curve_0_2(True),
        curve_1_1(True),
        curve_2_0(True),
        propeller_knot(),
    ]
    for length in range(2, max_slinky_length + 1, 2):
        kinds.append(hopf_slinky(length, is_knot=False))
        kinds.append(hopf_slinky(length, is_knot=True))
    return kinds


def _lhs_weight(f: Factor) -> int:
    if f.kind is FactorKind.HOPF_SLINKY:
        return (f.length or 0) + (0 if f.is_knot else 1)
    if f.kind is FactorKind.CURVE_1_1:
        return 0 if f.is_knot else 1
    if f.kind is FactorKind.CURVE_2_0:
        return 2 if f.is_knot else 3
    if f.kind in (FactorKind.LENS_CORE, FactorKind.HOPF_GRAPH):
        return 2
    if f.kind is FactorKind.PROPELLER_KNOT:
        return 4
    return 0


def _rhs_weight(f: Factor) -> int:
    if f.kind is FactorKind.TRIVIAL_TWO_BOUQUET:
        return 1
    if f.kind is FactorKind.CURVE_0_2:
        return 2 if f.is_knot else 1
    return 0


def _is_trivial(f: Factor) -> bool:
    return f.kind in (FactorKind.TRIVIAL_THETA, FactorKind.TRIVIAL_TWO_BOUQUET)


def iter_feasible_multisets(
    n_min: int,
    n_max: int,
    alphabet: Sequence[Factor] | None = None,
    seed: tuple[Factor, ...] = (),
    start_index: int = 0,
    extra_filter: Callable[[tuple[Factor, ...]], bool] | None = None,
) -> Iterator[Factorization]:
    """Ledger-feasible catalog multisets with n_min <= n <= n_max factors.

    ``seed`` fixes a prefix; further factors are drawn from
    ``alphabet[start_index:]`` in non-decreasing index order, which makes the
    output a duplicate-free multiset enumeration.  Prunes on the fly: the
    left-hand ledger weight only grows, and each remaining slot adds at most
    2 (plus one one-off trivial 2-bouquet credit) to the right-hand side.
    """
    alphabet = list(alphabet) if alphabet is not None else catalog_kinds()
    seed_lhs = sum(_lhs_weight(f) for f in seed)
    seed_rhs = 3 + sum(_rhs_weight(f) for f in seed)
    seed_trivial = sum(1 for f in seed if _is_trivial(f))
    if seed_trivial > 1:
        return

    def emit(prefix: list[Factor]) -> Iterator[Factorization]:
        if len(prefix) >= max(n_min, 1):
            factors = tuple(prefix)
            if extra_filter is None or extra_filter(factors):
                f = Factorization(factors)
                if equality_ledger(f).feasible:
                    yield f

    def recurse(start: int, prefix: list[Factor], lhs: int, rhs: int, trivial_used: bool):
        yield from emit(prefix)
        if len(prefix) >= n_max:
            return
        remaining = n_max - len(prefix)
        if lhs > rhs + 2 * remaining + (0 if trivial_used else 1):
            return
        for idx in range(start, len(alphabet)):
            f = alphabet[idx]
            if _is_trivial(f) and trivial_used:
                continue
            prefix.append(f)
            yield from recurse(
                idx,
                prefix,
                lhs + _lhs_weight(f),
                rhs + _rhs_weight(f),
                trivial_used or _is_trivial(f),
            )
            prefix.pop()

    yield from recurse(start_index, list(seed), seed_lhs, seed_rhs, seed_trivial == 1)


def _thread_count() -> int:
    raw = os.environ.get("NETEXT_THREADS", "1")
    try:
        return max(1, min(16, int(raw)))
    except ValueError:
        return 1


def _sort_key(f: Factorization):
    return tuple(str(x) for x in f.factors)


def _map_branches(worker: Callable[[int], list], n_branches: int) -> list:
    threads = _thread_count()
    if threads <= 1 or n_branches <= 1:
        chunks = [worker(i) for i in range(n_branches)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(worker, range(n_branches)))
    merged = [item for chunk in chunks for item in chunk]
    merged.sort(key=_sort_key)
    return merged


def tunnel_tight_theta_multisets(n_max: int = 8) -> list[Factorization]:
    """Theta-compatible multisets where the tunnel bound could be attained.

    Alphabet: (1,1)-curve graphs, (2,0)-curve graphs and graph slinkies (no
    knots, no (0,2)-curves, no trivial theta; handcuff-flavoured types cannot
    occur in a trivalent vertex sum of theta-curves).  A multiset qualifies
    when it is composite, has an odd factor count (an attained bound
    (m-1)/2 must be an integer), and passes the ledger.
    """
    alphabet = [curve_1_1(False), curve_2_0(False)] + [
        hopf_slinky(length, False) for length in range(2, 9, 2)
    ]
    results = list(
        iter_feasible_multisets(
            2, n_max, alphabet, extra_filter=lambda fs: len(fs) % 2 == 1
        )
    )
    results.sort(key=_sort_key)
    return results


def distribution_counterexamples(n_max: int = 8) -> list[Factorization]:
    """Ledger-feasible multisets (2..n_max factors) failing any distribution
    inequality.  Expected to be empty; a nonempty result is a modeling bug."""
    alphabet = catalog_kinds()

    def worker(first: int) -> list[Factorization]:
        bad = []
        for f in iter_feasible_multisets(
            2,
            n_max,
            alphabet,
            seed=(alphabet[first],),
            start_index=first,
        ):
            report = distribution_check(f)
            if not report.all_hold():
                bad.append(f)
        return bad

    return _map_branches(worker, len(alphabet))


def count_feasible_multisets(n_max: int = 8) -> int:
    return sum(1 for _ in iter_feasible_multisets(2, n_max))

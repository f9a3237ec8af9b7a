import json
from importlib import resources

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ksgraceful import skolem as S
from ksgraceful.graph import verify_labeling
from ksgraceful.oracles import brute_force_k_skolem, brute_force_pairings


def test_sequence_validation():
    assert S.SkolemSequence(1, ((2, 1), (6, 4), (8, 5), (7, 3))).is_valid()
    bad = S.SkolemSequence(1, ((2, 1), (6, 4), (8, 5), (7, 2)))
    assert not bad.is_valid()
    with pytest.raises(S.SkolemError):
        bad.validate()


@pytest.mark.parametrize("k", range(1, 101))
def test_length_2k_minus_1_closed_form(k):
    s = S.k_skolem_length_2k_minus_1(k)
    assert s.is_valid() and s.n == 2 * k - 1
    g, lab = S.skolem_to_nk2_labeling(s)
    assert verify_labeling(g, lab)
    assert sorted(lab.edge_labels) == list(range(k, 3 * k - 1))


@pytest.mark.parametrize("n", range(4, 401, 4))
def test_multiple_of_four_closed_form(n):
    assert S.skolem_multiple_of_four(n).is_valid()


@pytest.mark.parametrize("n,k", [(n, k) for k in (1, 2, 3) for n in range(1, 8)])
def test_search_counts_match_brute_force(n, k):
    rep = S.search_k_skolem(n, k, count_all=True)
    assert rep.exhausted
    assert rep.count == brute_force_k_skolem(n, k)
    plain = S.search_k_skolem(n, k, count_all=True, prune=False)
    assert plain.count == rep.count


@pytest.mark.parametrize("n", [n for n in range(1, 11) if n % 4 in (2, 3)])
def test_classic_nonexistence_without_parity_shortcut(n):
    rep = S.search_k_skolem(n, 1, prune=False)
    assert rep.exhausted and rep.count == 0


@pytest.mark.parametrize("n,k", [(n, k) for k in range(1, 6) for n in range(1, 12)])
def test_sum_integrality_filter_is_sound(n, k):
    if S.k_skolem_feasible(n, k).infeasible:
        assert S.search_k_skolem(n, k).count == 0


def test_sum_integrality_residues():
    for n in range(1, 30):
        assert S.k_skolem_feasible(n, 1).infeasible == (n % 4 in (2, 3))
        assert S.k_skolem_feasible(n, 2).infeasible == (n % 4 in (1, 2))


@pytest.mark.parametrize("n", range(1, 85))
def test_two_skolem_up_to_84(n):
    s = S.two_skolem(n)
    if n % 4 in (1, 2):
        assert s is None
    else:
        assert s.k == 2 and s.n == n and s.is_valid()


def test_two_skolem_range_guard():
    with pytest.raises(S.UnsupportedRangeError):
        S.two_skolem(85)


@pytest.mark.parametrize("r", range(4, 9))
def test_census_matches_matching_oracle(r):
    prob = S.PairingProblem(r)
    assert S.pairing_census(r).count == brute_force_pairings(list(prob.ground_set), list(prob.target_differences))


def test_census_eleven():
    rep = S.pairing_census(11)
    assert rep.exhausted and rep.count == 189


def test_census_small_values_are_deterministic():
    assert [S.pairing_census(r).count for r in range(4, 11)] == [1, 1, 3, 3, 11, 19, 81]


def test_printed_table_rows():
    bad = [r for r, row in S.PAIRING_TABLE.items() if not S.PairingProblem(r).is_solution(row)]
    assert bad == [10]
    sol, info = S.repair_table_row(10, S.PAIRING_TABLE[10])
    assert S.PairingProblem(10).is_solution(sol)
    # only the reversed pair changes
    assert set(info.printed) - set(sol) == {(44, 48)}
    assert set(sol) - set(info.printed) == {(54, 48)}
    # the eight well-formed printed pairs admit exactly one completion
    others = [pr for pr in info.printed if pr != (44, 48)]
    assert S.pairing_census(10, fixed=others).count == 1


@pytest.mark.parametrize("r", range(4, 22))
def test_find_pairing(r):
    sol = S.find_pairing(r)
    assert S.PairingProblem(r).is_solution(sol)


def test_cached_pairings_are_solutions():
    raw = json.loads(resources.files("ksgraceful").joinpath("data/two_skolem_pairings.json").read_text())
    assert raw["pairings"]
    for r, pairs in raw["pairings"].items():
        assert S.PairingProblem(int(r)).is_solution([tuple(p) for p in pairs])


@given(st.integers(1, 30))
def test_nk2_conversion_round_trip(k):
    s = S.k_skolem_length_2k_minus_1(k)
    g, lab = S.skolem_to_nk2_labeling(s)
    assert S.nk2_labeling_to_skolem(lab) == s


@pytest.mark.parametrize("n", [n for n in range(1, 25)])
def test_classic_boundary(n):
    s = S.skolem_classic(n)
    assert (s is not None) == (n % 4 in (0, 1))
    if s is not None:
        assert s.is_valid() and s.n == n


def test_recursive_family_sizes():
    for k in range(1, 5):
        for r in range(1, 5):
            g, lab = S.nk2_recursive_family(k, r)
            n = (2 * k - 1) * (3 ** r - 1) // 2
            assert g.q == n and verify_labeling(g, lab)
            assert sorted(lab.edge_labels) == list(range(k, k + n))

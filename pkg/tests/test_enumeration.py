import pytest

from cpqtransfer import (
    Grid,
    InputError,
    ResourceGuardError,
    catalan,
    chain,
    count_compatible_pairs,
    count_filtered,
    count_transfer_systems,
    enumerate_transfer_systems,
    fuss_catalan_A,
    hull,
    transfer_closure,
)
from cpqtransfer.enumeration import naive_transfer_systems

import oracles
from conftest import as_set


@pytest.mark.parametrize("r, s", [(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (1, 2)])
def test_enumerator_equals_naive_filters(r, s):
    g = Grid(r, s)
    fast = enumerate_transfer_systems(g)
    assert fast == naive_transfer_systems(g)
    assert sorted(map(frozenset, map(as_set, fast)), key=sorted) == sorted(
        map(frozenset, oracles.all_transfer_systems(r, s)), key=sorted
    )


def test_known_counts():
    assert count_transfer_systems(Grid(0, 0)) == 1
    assert count_transfer_systems(chain(2)) == 5
    assert count_transfer_systems(chain(3)) == 14
    assert count_transfer_systems(Grid(1, 1)) == 10
    assert count_transfer_systems(Grid(2, 1)) == count_transfer_systems(Grid(1, 2)) == 68
    assert count_transfer_systems(Grid(2, 2)) == 1396


@pytest.mark.parametrize("n", range(8))
def test_chain_counts_are_catalan(n):
    assert count_transfer_systems(chain(n)) == catalan(n + 1)


def test_canonical_order_and_no_duplicates():
    systems = enumerate_transfer_systems(Grid(2, 2))
    masks = [T.mask for T in systems]
    assert masks == sorted(set(masks))


def test_containing_restricts_to_supersets():
    g = Grid(2, 1)
    T = transfer_closure(g, [((0, 0), (1, 0))])
    above = enumerate_transfer_systems(g, containing=T)
    assert above == [X for X in enumerate_transfer_systems(g) if T <= X]


def test_guard():
    with pytest.raises(ResourceGuardError):
        enumerate_transfer_systems(Grid(4, 4))
    with pytest.raises(ResourceGuardError):
        enumerate_transfer_systems(Grid(2, 2), max_vertices=8)


def test_compatible_pair_counts():
    assert count_compatible_pairs(Grid(0, 0)) == 1
    for n in (1, 2, 3):
        assert count_compatible_pairs(chain(n)) == fuss_catalan_A(n + 1)
    assert [count_compatible_pairs(chain(n)) for n in (1, 2, 3)] == [3, 12, 55]


def test_compatible_pairs_grid_1_1_by_definition():
    g = Grid(1, 1)
    sets = [as_set(T) for T in enumerate_transfer_systems(g)]
    expect = sum(oracles.is_compatible(1, 1, a, b) for a in sets for b in sets)
    assert count_compatible_pairs(g) == expect


def test_filtered_counts():
    assert count_filtered(chain(2), "lsp") == 3
    assert count_filtered(chain(3), "lsp") == 7
    assert count_filtered(chain(2), "connected") == 2
    g = Grid(2, 1)
    assert count_filtered(g, "saturated") == sum(hull(T) == T for T in enumerate_transfer_systems(g))
    with pytest.raises(InputError):
        count_filtered(g, "pretty")

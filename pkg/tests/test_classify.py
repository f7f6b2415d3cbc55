from fractions import Fraction

import pytest

from cpqtransfer import (
    Grid,
    InputError,
    Reason,
    TransferSystem,
    Vertex,
    catalan,
    complete_relation,
    compatible_supersets,
    components,
    enumerate_transfer_systems,
    fuss_catalan_A,
    hull,
    is_lsp_fast,
    is_lsp_oracle,
    lsp_count_chain,
    lsp_proportion_chain,
    shape_of,
    smallest_vertex,
    zigzag_path,
)
from cpqtransfer.classify import Hk, Lshape, Rectangle, Vl, compatible_pair_formulas, round_half_up
from cpqtransfer.compatibility import compatible

import oracles
from conftest import as_set, load_ts


def test_conncomps_middle_components():
    T = load_ts("conncomps_middle")
    part = components(T)
    assert part.count == 2
    assert part.as_sets() == {
        frozenset({Vertex(0, 0), Vertex(0, 1)}),
        frozenset({Vertex(1, 0), Vertex(2, 0), Vertex(1, 1), Vertex(2, 1)}),
    }
    assert part.smallest == (Vertex(0, 0), Vertex(1, 0))
    assert zigzag_path(T, (1, 1), (2, 0)) == (Vertex(1, 1), Vertex(1, 0), Vertex(2, 0))
    assert zigzag_path(T, (0, 0), (2, 1)) is None


def test_component_counts_of_figure_systems():
    assert components(load_ts("conncomps_left")).count == 2
    assert components(load_ts("conncomps_right")).count == 4
    assert components(load_ts("firstexample")).count == 1
    assert components(TransferSystem.diagonal(Grid(1, 1))).count == 4


def test_smallest_vertex_examples():
    assert smallest_vertex(load_ts("fig_3NotLSPEx_T"), (3, 2)) == Vertex(3, 0)
    assert smallest_vertex(load_ts("compat_T"), (2, 1)) == Vertex(2, 0)
    assert smallest_vertex(load_ts("firstexample"), (0, 0)) == Vertex(0, 0)


def test_shapes_of_figure_systems():
    T = load_ts("twocomp_h0")
    assert shape_of(T, 0) == Hk(0)
    L = load_ts("fig_LShapedNotLSPEx_T")
    assert shape_of(L, 0) == Lshape(0, 0)
    assert shape_of(L, 1) == Rectangle((1, 1), (2, 2))
    assert shape_of(load_ts("compat_T"), 0) == Vl(1)
    assert shape_of(load_ts("fig_2CompNotLSPEx_T"), 0) == Hk(1)
    assert str(Lshape(0, 0)) == "L(0,0)" and str(Hk(0)) == "H0" and str(Vl(1)) == "V1"


def test_shape_bad_id():
    with pytest.raises(InputError):
        shape_of(TransferSystem.diagonal(Grid(1, 1)), 7)


def test_top_component_is_rectangle_everywhere():
    g = Grid(2, 2)
    for T in enumerate_transfer_systems(g):
        part = components(T)
        shape = shape_of(T, part.id_of(g.top))
        assert shape.kind == "Rectangle"
        lo, hi = shape.params
        assert hi == g.top and lo == part.smallest[part.id_of(g.top)]


def test_lsp_verdicts_on_figures():
    first = is_lsp_fast(load_ts("firstexample"))
    assert first.is_lsp and first.reason is Reason.CONNECTED
    h0 = is_lsp_fast(load_ts("twocomp_h0"))
    assert h0.is_lsp and h0.describe() == "LSP (two components, H0)"
    three = is_lsp_fast(load_ts("fig_3NotLSPEx_T"))
    assert not three.is_lsp and three.reason is Reason.THREE_PLUS
    assert three.witness == load_ts("fig_3NotLSPEx_Tp")
    thick = is_lsp_fast(load_ts("fig_2CompNotLSPEx_T"))
    assert not thick.is_lsp and thick.reason is Reason.TWO_COMP_THICK
    ell = is_lsp_fast(load_ts("fig_LShapedNotLSPEx_T"))
    assert not ell.is_lsp and ell.reason is Reason.TWO_COMP_L


@pytest.mark.parametrize(
    "name", ["firstexample", "twocomp_h0", "fig_3NotLSPEx_T", "fig_2CompNotLSPEx_T", "fig_LShapedNotLSPEx_T"]
)
def test_oracle_agrees_on_figures(name):
    T = load_ts(name)
    assert is_lsp_oracle(T).is_lsp == is_lsp_fast(T).is_lsp


def test_trivial_oracle_cases():
    assert is_lsp_oracle(complete_relation(Grid(1, 1))).is_lsp
    assert not is_lsp_oracle(TransferSystem.diagonal(Grid(1, 1))).is_lsp


def test_witness_is_a_nontrivial_compatible_partner():
    g = Grid(2, 1)
    top = complete_relation(g)
    for T in enumerate_transfer_systems(g):
        v = is_lsp_fast(T)
        if not v.is_lsp:
            W = v.witness
            assert compatible(T, W) and W not in (hull(T), top)
            assert W.has(*v.added_edge)


@pytest.mark.parametrize("r, s", [(1, 1), (2, 1), (1, 2), (3, 0)])
def test_fast_classifier_matches_set_oracle(r, s):
    g = Grid(r, s)
    systems = enumerate_transfer_systems(g)
    sets = {T: as_set(T) for T in systems}
    top = complete_relation(g)
    for T in systems:
        partners = {Tp for Tp in systems if oracles.is_compatible(r, s, sets[T], sets[Tp])}
        assert is_lsp_fast(T).is_lsp == (partners == {hull(T), top})
        assert partners == set(compatible_supersets(T))


@pytest.mark.slow
def test_fast_classifier_matches_oracle_on_grid_2_2():
    lsp = 0
    for T in enumerate_transfer_systems(Grid(2, 2)):
        fast = is_lsp_fast(T).is_lsp
        assert fast == is_lsp_oracle(T).is_lsp
        lsp += fast
    assert lsp == 673


def test_catalan_and_fuss_catalan():
    assert catalan(0) == 1 and catalan(3) == 5
    assert [catalan(n) for n in range(10)] == [oracles.catalan(n) for n in range(10)]
    assert fuss_catalan_A(2) == 3
    assert [fuss_catalan_A(m) for m in range(1, 6)] == [1, 3, 12, 55, 273]
    with pytest.raises(InputError):
        catalan(-1)


def test_lsp_chain_counts_and_proportions():
    assert lsp_count_chain(1) == 2 and lsp_proportion_chain(1) == 1
    assert lsp_count_chain(2) == 3 and lsp_proportion_chain(2) == Fraction(3, 5)
    assert str(round_half_up(lsp_proportion_chain(4))) == "0.45"
    for n in range(1, 40):
        assert lsp_proportion_chain(n) == Fraction(5 * n * n + 9 * n - 2, 16 * n * n - 4)


def test_round_half_up_on_exact_half():
    assert str(round_half_up(Fraction(1, 8))) == "0.13"
    assert str(round_half_up(Fraction(3, 8), 1)) == "0.4"


def test_pair_formula_readings():
    forms = compatible_pair_formulas(1)
    assert forms["shifted"] == 3 and forms["literal"] == 1

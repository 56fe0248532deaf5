from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import pytest

from tenj.category.cochains import coboundary, random_cochain
from tenj.category.gauge import constant_rescaling, random_rescaling
from tenj.category.generators import gen_twisted_dw, pointed_preset
from tenj.category.groups import group_preset
from tenj.category.io import load_category
from tenj.errors import ReductionSelfCheckFailed
from tenj.fixtures import fixture_path
from tenj.scalar import ONE, Cyclotomic, format_exact, parse_scalar
from tenj.simplicial import boundary_simplex, disjoint_union, orient_complex, random_move_walk, reorder
from tenj.simplicial.io import load_oriented
from tenj.statesum.engine import (
    FacetNetwork,
    StateSumOptions,
    compute,
    gauge_slice,
    gauge_transform_test,
    normalization,
    self_check_reduction,
    state_sum,
    state_sum_reduced,
    ten_j_action,
)
from tenj.statesum.oracle import untwisted_dw_value
from tenj.statesum.states import enumerate_states, search_order
from tenj.utils.rng import make_rng

REDUCED = StateSumOptions(mode="reduced")


SHIPPED_CATEGORIES = [
    "trivial.json",
    "dw_z2.json",
    "dw_z3.json",
    "boson.json",
    "fermion.json",
    "semion.json",
    "antisemion.json",
    "yetter_z2_z2.json",
]


def complex_(name):
    return load_oriented(fixture_path(name))


@pytest.fixture(scope="module")
def delta5():
    return orient_complex(boundary_simplex(5))


@pytest.fixture(scope="module")
def cp2():
    return complex_("cp2_kuhnel9.json")


@pytest.fixture(scope="module")
def s1xs3():
    return complex_("s1xs3_staircase.json")


@pytest.fixture(scope="module")
def moved(delta5):
    return random_move_walk(delta5, 20, seed=7)


@pytest.mark.parametrize(
    "complex_name, category, mode, expected",
    [
        ("boundary_delta5.json", "trivial.json", "full", "1"),
        ("boundary_delta5.json", "dw_z2.json", "full", "1/2"),
        ("boundary_delta5.json", "dw_z3.json", "full", "1/3"),
        ("cp2_kuhnel9.json", "dw_z2.json", "full", "1/2"),
        ("s1xs3_staircase.json", "dw_z2.json", "reduced", "1"),
        ("boundary_delta5.json", "semion.json", "full", "2"),
        ("boundary_delta5.json", "semion.json", "reduced", "2"),
        ("s1xs3_staircase.json", "fermion.json", "reduced", "1"),
        ("cp2_kuhnel9.json", "boson.json", "reduced", "4"),
        ("cp2_kuhnel9.json", "fermion.json", "reduced", "0"),
        ("cp2_kuhnel9.json", "semion.json", "reduced", "2 - 2*z4"),
        ("cp2_kuhnel9.json", "antisemion.json", "reduced", "2 + 2*z4"),
        ("boundary_delta5.json", "yetter_z2_z2.json", "reduced", "1"),
        ("s1xs3_staircase.json", "yetter_z2_z2.json", "reduced", "1"),
        ("cp2_kuhnel9.json", "yetter_z2_z2.json", "reduced", "2"),
    ],
)
def test_known_values(complex_name, category, mode, expected):
    o = complex_(complex_name)
    cat = load_category(fixture_path(category))
    assert format_exact(state_sum(o, cat, StateSumOptions(mode=mode))) == expected


def test_semion_on_cp2_is_conjugate_to_antisemion(cp2):
    semion = state_sum_reduced(cp2, pointed_preset("semion"))
    antisemion = state_sum_reduced(cp2, pointed_preset("antisemion"))
    assert format_exact(semion) == "2 - 2*z4"
    assert format_exact(antisemion) == "2 + 2*z4"
    assert semion.conjugate() == antisemion


def test_reversed_orientation_conjugates(cp2):
    cat = pointed_preset("semion")
    value = state_sum_reduced(cp2, cat)
    reversed_value = state_sum(cp2, cat, StateSumOptions(mode="reduced", reverse_orientation=True))
    assert reversed_value == value.conjugate()


def test_untwisted_dw_matches_flat_connections(delta5, cp2):
    for o, group in ((delta5, "Z2"), (delta5, "Z3"), (cp2, "Z2")):
        assert state_sum(o, gen_twisted_dw(group)) == untwisted_dw_value(o, group_preset(group))


@pytest.mark.parametrize(
    "complex_name, category",
    [
        ("boundary_delta5.json", "fermion.json"),
        ("boundary_delta5.json", "semion.json"),
        ("boundary_delta5.json", "yetter_z2_z2.json"),
        ("cp2_kuhnel9.json", "dw_z2.json"),
        ("s1xs3_staircase.json", "dw_z2.json"),
    ],
)
def test_full_equals_reduced(complex_name, category):
    o = complex_(complex_name)
    cat = load_category(fixture_path(category))
    full = compute(o, cat)
    reduced = compute(o, cat, REDUCED)
    assert full.value == reduced.value
    assert reduced.states < full.states
    assert reduced.meta["self_check"] == 32


def test_reduced_bookkeeping(delta5):
    result = compute(delta5, pointed_preset("semion"), REDUCED)
    assert result.meta["fixed_edges"] == 0
    assert result.meta["fixed_triangles"] == 10
    assert result.factor == 2**10
    assert result.states == 1
    assert result.meta["rng"] == "numpy.PCG64"

    result = compute(delta5, gen_twisted_dw("Z3"), REDUCED)
    assert result.meta["fixed_edges"] == 5
    assert result.meta["fixed_triangles"] == 0
    assert result.factor == 3**5


@pytest.mark.parametrize("threads, split_depth", [(1, 0), (1, 4), (3, 2), (4, 6)])
def test_threads_and_splitting(delta5, threads, split_depth):
    cat = pointed_preset("semion")
    options = StateSumOptions(threads=threads, split_depth=split_depth)
    result = compute(delta5, cat, options)
    assert format_exact(result.value) == "2"
    assert result.states == 2**10
    if split_depth == 0:
        assert result.tasks == 1


def shuffled_orders(o, count, seed):
    rng = make_rng(seed)
    for _ in range(count):
        yield tuple(o.order[i] for i in rng.permutation(len(o.order)))


@pytest.mark.parametrize("category", SHIPPED_CATEGORIES)
def test_vertex_order_does_not_matter(delta5, moved, category):
    cat = load_category(fixture_path(category))
    for o in (delta5, moved):
        value = state_sum_reduced(o, cat)
        for order in shuffled_orders(o, 10, seed=5):
            assert state_sum_reduced(reorder(o, order), cat) == value


@pytest.mark.parametrize(
    "category, expected",
    [
        ("dw_z2.json", "1/2"),
        ("dw_z3.json", "1/3"),
        ("semion.json", "2"),
        ("fermion.json", "2"),
        ("yetter_z2_z2.json", "1"),
    ],
)
def test_bistellar_moves_do_not_matter(moved, category, expected):
    assert len(moved.history) == 20
    cat = load_category(fixture_path(category))
    assert format_exact(state_sum_reduced(moved, cat)) == expected


@pytest.mark.parametrize(
    "category, value_delta5, value_s1xs3",
    [
        ("dw_z2.json", "1/2", "1"),
        ("semion.json", "2", "1"),
        ("fermion.json", "2", "1"),
        ("yetter_z2_z2.json", "1", "1"),
    ],
)
def test_disjoint_union_multiplies(delta5, s1xs3, category, value_delta5, value_s1xs3):
    cat = load_category(fixture_path(category))
    a = parse_scalar(value_delta5)
    b = parse_scalar(value_s1xs3)
    assert state_sum_reduced(disjoint_union(delta5, delta5), cat) == a * a
    assert state_sum_reduced(disjoint_union(delta5, s1xs3), cat) == a * b


@pytest.mark.parametrize(
    "complex_name, expected",
    [
        ("boundary_delta5.json", "1/2"),
        ("s1xs3_staircase.json", "1"),
        ("cp2_kuhnel9.json", "1/2"),
    ],
)
@pytest.mark.parametrize("seed", [9, 10, 11])
def test_cohomologous_twist(complex_name, expected, seed):
    z2 = group_preset("Z2")
    omega = coboundary(random_cochain(z2, 3, seed=seed))
    cat = gen_twisted_dw(z2, omega)
    assert format_exact(state_sum_reduced(complex_(complex_name), cat)) == expected


def test_normalization_and_action(delta5):
    cat = pointed_preset("semion")
    state = next(iter(enumerate_states(delta5, cat, nonzero_only=True)))
    # dim(C)^-6 d(*)^-15
    assert normalization(delta5, cat, state) == Cyclotomic.from_rational(2) ** -9
    assert ten_j_action(delta5, cat, state) == ONE


def test_gauge_transform(delta5):
    report = gauge_transform_test(delta5, pointed_preset("semion"), random_rescaling(3))
    assert report.passed
    assert report.meta["rng"] == "numpy.PCG64"
    report = gauge_transform_test(delta5, gen_twisted_dw("Z2"), constant_rescaling(2))
    assert report.passed
    # fifteen V+ slots over the six facets
    report = gauge_transform_test(
        delta5, gen_twisted_dw("Z2"), constant_rescaling(2), compensate=False
    )
    assert not report.passed
    assert report.failures[0].detail == "1/2 became 16384"


def test_reduced_needs_group_like_category(delta5):
    cat = replace(gen_twisted_dw("Z2"), symmetry=None)
    assert state_sum(delta5, cat) == Cyclotomic.from_rational("1/2")
    with pytest.raises(ValueError):
        state_sum_reduced(delta5, cat)


def test_options_are_checked():
    with pytest.raises(AssertionError):
        StateSumOptions(mode="sampled")
    with pytest.raises(AssertionError):
        StateSumOptions(self_check_samples=8)
    with pytest.raises(AssertionError):
        StateSumOptions(threads=0)


class EdgeSensitiveNetwork(FacetNetwork):
    def term(self, edges, triangles):
        return ONE if all(g == "0" for g in edges.values()) else Cyclotomic.from_rational(2)


def test_self_check_catches_gauge_dependence(delta5):
    cat = gen_twisted_dw("Z2")
    cut = gauge_slice(delta5, cat)
    order = search_order(delta5, tuple(cut.edges), tuple(cut.triangles))
    assert self_check_reduction(FacetNetwork(delta5, cat), order, cut, REDUCED) == 32
    with pytest.raises(ReductionSelfCheckFailed):
        self_check_reduction(EdgeSensitiveNetwork(delta5, cat), order, cut, REDUCED)


def test_worker_threads_share_cached_tensors(delta5):
    cat = pointed_preset("semion")
    simplex = (("*",) * 10, ("0",) * 10)
    with ThreadPoolExecutor(max_workers=8) as pool:
        tensors = list(pool.map(lambda _: cat.ten_j(simplex, 1), range(64)))
    assert all(t is tensors[0] for t in tensors)
    network = FacetNetwork(delta5, cat)
    result = compute(delta5, cat, StateSumOptions(threads=4, split_depth=6))
    assert format_exact(result.value) == "2"
    assert network.plan({t: 1 for t in network.skeleton.tets}) is network.plan(
        {t: 1 for t in network.skeleton.tets}
    )

"""The state sum Z_C(K) = sum over states of normalization * 10j action."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import islice
from threading import Lock
from typing import Dict, Hashable, List, Mapping, Optional, Tuple

import numpy as np

from tenj.category.data import Fusion2CatData
from tenj.category.gauge import BasisRescaling, gauge_transformed
from tenj.category.groups import GroupPresentation
from tenj.category.labels import labels_of, search_labelings, ten_j_index_order
from tenj.errors import ReductionSelfCheckFailed
from tenj.scalar import ONE, ZERO, Cyclotomic, format_exact
from tenj.simplicial.orientation import OrderedOrientedComplex, reverse_orientation
from tenj.statesum.network import ContractionPlan, contract, plan_contraction, scalar_of
from tenj.statesum.states import SearchOrder, Skeleton, State, search_order, skeleton, spanning_forest
from tenj.utils.reports import Report, print_color
from tenj.utils.rng import RNG_ALGORITHM, make_rng

MODES = ("full", "reduced")


def facet_nodes(o: OrderedOrientedComplex) -> Tuple[Tuple, ...]:
    """Slots of each facet's 10j tensor, in argument order."""
    nodes: List[Tuple] = []
    for f in o.ordered_facets:
        eps = o.sign(f)
        nodes.append(tuple((tuple(f[i] for i in face), slot) for face, slot in ten_j_index_order(eps)))
    return tuple(nodes)


def facet_plan(o: OrderedOrientedComplex, dims: Mapping[Hashable, int]) -> ContractionPlan:
    """Contraction plan of the facet network of ``o`` for the given tetrahedron dimensions."""
    return plan_contraction(facet_nodes(o), dims)


@dataclass
class StateSumOptions:
    mode: str = "full"
    """'full' enumerates every state, 'reduced' fixes a gauge first (group-like categories only)."""

    threads: int = 1
    """Worker threads; the value does not depend on it."""

    split_depth: int = 2
    """Number of leading search decisions that split the enumeration into tasks."""

    reverse_orientation: bool = False

    self_check_samples: int = 32
    """Random gauge-shifted states compared before a reduced sum is trusted."""

    seed: int = 0
    verbose: bool = False

    def __post_init__(self):
        assert self.mode in MODES, f"mode must be one of {MODES}, got {self.mode!r}"
        assert self.threads >= 1, "threads must be positive"
        assert self.split_depth >= 0, "split_depth must be nonnegative"
        assert self.self_check_samples >= 32, "the reduction self-check needs at least 32 samples"
        assert 0 <= self.seed < 2**64, "seed must be a 64-bit unsigned integer"


@dataclass(frozen=True)
class StateSumResult:
    value: Cyclotomic
    mode: str
    states: int
    """States with a nonzero tetrahedron space everywhere that were evaluated."""

    tasks: int
    factor: Cyclotomic = ONE
    """Gauge orbit size multiplying a reduced sum."""

    meta: Dict[str, object] = field(default_factory=dict)


class FacetNetwork:
    """The 10j/copairing network of an ordered oriented complex, evaluated on states."""

    def __init__(self, o: OrderedOrientedComplex, cat: Fusion2CatData):
        self.o = o
        self.cat = cat
        self.skeleton: Skeleton = skeleton(o)
        self.facets = tuple((f, o.sign(f)) for f in self.skeleton.facets)
        self.nodes = facet_nodes(o)
        self.vertex_factor = cat.total_dimension.inverse() ** len(self.skeleton.vertices)
        self._inv_d = {a: cat.d(a).inverse() for a in cat.objects}
        self._plans: Dict[Tuple[int, ...], ContractionPlan] = {}
        self._lock = Lock()

    def plan(self, dims: Mapping[Hashable, int]) -> ContractionPlan:
        key = tuple(dims[t] for t in self.skeleton.tets)
        plan = self._plans.get(key)
        if plan is None:
            plan = plan_contraction(self.nodes, dims)
            with self._lock:
                plan = self._plans.setdefault(key, plan)
        return plan

    def normalization(self, edges: Mapping, triangles: Mapping) -> Cyclotomic:
        out = self.vertex_factor
        for e in self.skeleton.edges:
            out = out * self._inv_d[edges[e]]
        dim_mor = self.cat.dim_mor
        for t in self.skeleton.triangles:
            out = out * dim_mor[triangles[t]]
        return out

    def action(self, edges: Mapping, triangles: Mapping) -> Cyclotomic:
        cat = self.cat
        dims: Dict[Hashable, int] = {}
        tetra_labels = {}
        for tet in self.skeleton.tets:
            labels = labels_of(tet, edges, triangles)
            n = cat.tetra_dim(labels)
            if n == 0:
                return ZERO
            dims[tet] = n
            tetra_labels[tet] = labels
        tensors = [cat.ten_j(labels_of(f, edges, triangles), eps) for f, eps in self.facets]
        if all(n == 1 for n in dims.values()):
            out = ONE
            for tensor in tensors:
                out = out * tensor.reshape(-1)[0]
            for labels in tetra_labels.values():
                out = out * cat.copairing(labels)[0, 0]
            return out
        copairings = {tet: cat.copairing(labels) for tet, labels in tetra_labels.items()}
        return scalar_of(contract(self.plan(dims), tensors, copairings))

    def term(self, edges: Mapping, triangles: Mapping) -> Cyclotomic:
        z = self.action(edges, triangles)
        if not z:
            return ZERO
        return self.normalization(edges, triangles) * z


def normalization(o: OrderedOrientedComplex, cat: Fusion2CatData, state: State) -> Cyclotomic:
    """dim(C)^-1 per vertex, d(A)^-1 per edge labeled A, dim(f) per triangle labeled f."""
    return FacetNetwork(o, cat).normalization(state.edges, state.triangles)


def ten_j_action(o: OrderedOrientedComplex, cat: Fusion2CatData, state: State) -> Cyclotomic:
    """Contraction of the 10j tensors of all facets with the copairings of all tetrahedra.

    Raises:
        IndexMismatch: if a category tensor disagrees with the tetrahedron spaces
    """
    return FacetNetwork(o, cat).action(state.edges, state.triangles)


def _split(order: SearchOrder, depth: int):
    depth = min(depth, order.depth)
    n_edges = min(depth, len(order.edges))
    n_tris = depth - n_edges
    return (
        (order.edges[:n_edges], order.triangles[:n_tris]),
        (order.edges[n_edges:], order.triangles[n_tris:]),
    )


def _enumerate(
    network: FacetNetwork,
    order: SearchOrder,
    known_edges: Mapping,
    known_triangles: Mapping,
    options: StateSumOptions,
) -> Tuple[Cyclotomic, int, int]:
    cat = network.cat
    sk = network.skeleton
    (head_edges, head_tris), (rest_edges, rest_tris) = _split(order, options.split_depth)
    prefixes = [
        (dict(e), dict(t))
        for e, t in search_labelings(
            cat, head_edges, head_tris, sk.triangles, sk.tets, known_edges, known_triangles
        )
    ]

    def task(prefix) -> Tuple[Cyclotomic, int]:
        total = ZERO
        count = 0
        for e, t in search_labelings(
            cat, rest_edges, rest_tris, sk.triangles, sk.tets, prefix[0], prefix[1]
        ):
            total = total + network.term(e, t)
            count += 1
        return total, count

    if options.threads == 1 or len(prefixes) <= 1:
        results = [task(p) for p in prefixes]
    else:
        with ThreadPoolExecutor(max_workers=options.threads) as pool:
            results = list(pool.map(task, prefixes))
    value = ZERO
    states = 0
    for i, (partial, count) in enumerate(results):
        value = value + partial
        states += count
        if options.verbose:
            print_color(f"task {i + 1}/{len(results)}: {count} states", color="cyan")
    return value, states, len(prefixes)


@dataclass(frozen=True)
class GaugeSlice:
    """Labels fixed by the reduction and the number of states each slice state stands for."""

    edges: Dict[Tuple, str]
    triangles: Dict[Tuple, str]
    factor: Cyclotomic


def _triangle_edges(t: Tuple) -> Tuple[Tuple, Tuple, Tuple]:
    return (t[0], t[1]), (t[1], t[2]), (t[0], t[2])


def gauge_slice(o: OrderedOrientedComplex, cat: Fusion2CatData) -> GaugeSlice:
    """Tree edges set to the unit object, then pivot triangles set to the unit 1-morphism.

    A pivot triangle has exactly one edge not yet used by the tree or an earlier pivot; shifting
    the triangle labels by the coboundary of a value on that edge reaches the unit.

    Raises:
        ValueError: if the category carries no group symmetry of its labels
    """
    if cat.symmetry is None:
        raise ValueError(
            f"reduced mode needs a group-like category (Dijkgraaf-Witten, pointed or Yetter), got {cat.name!r}"
        )
    G = cat.symmetry.objects
    A = cat.symmetry.morphisms
    tree = spanning_forest(o)
    edges = {e: G.unit for e in tree} if len(G) > 1 else {}
    triangles: Dict[Tuple, str] = {}
    if len(A) > 1:
        used = set(tree)
        pending = list(skeleton(o).triangles)
        changed = True
        while changed:
            changed = False
            for t in list(pending):
                unused = [e for e in _triangle_edges(t) if e not in used]
                if len(unused) == 1:
                    triangles[t] = A.unit
                    used.add(unused[0])
                    pending.remove(t)
                    changed = True
    factor = Cyclotomic.from_rational(len(G)) ** len(edges) * Cyclotomic.from_rational(len(A)) ** len(triangles)
    return GaugeSlice(edges, triangles, factor)


def _shift(
    edges: Mapping,
    triangles: Mapping,
    G: GroupPresentation,
    A: GroupPresentation,
    sk: Skeleton,
    rng: np.random.Generator,
) -> Tuple[Dict, Dict]:
    """A random vertex gauge on edge labels and a random coboundary shift of triangle labels."""
    h = {v: G.elements[k] for v, k in zip(sk.vertices, rng.integers(len(G), size=len(sk.vertices)))}
    b = {e: A.elements[k] for e, k in zip(sk.edges, rng.integers(len(A), size=len(sk.edges)))}
    new_edges = {(u, v): G.product(h[u], g, G.inv(h[v])) for (u, v), g in edges.items()}
    new_tris = {}
    for t, a in triangles.items():
        e01, e12, e02 = _triangle_edges(t)
        new_tris[t] = A.product(a, b[e12], A.inv(b[e02]), b[e01])
    return new_edges, new_tris


def self_check_reduction(
    network: FacetNetwork, order: SearchOrder, cut: GaugeSlice, options: StateSumOptions
) -> int:
    """Compare terms of slice states with terms of random gauge shifts of them.

    Returns the number of comparisons made.

    Raises:
        ReductionSelfCheckFailed: on the first term that changes under a shift
    """
    cat = network.cat
    assert cat.symmetry is not None
    sk = network.skeleton
    samples = [
        (dict(e), dict(t))
        for e, t in islice(
            search_labelings(
                cat, order.edges, order.triangles, sk.triangles, sk.tets, cut.edges, cut.triangles
            ),
            options.self_check_samples,
        )
    ]
    if not samples:
        return 0
    rng = make_rng(options.seed)
    G, A = cat.symmetry.objects, cat.symmetry.morphisms
    for i in range(options.self_check_samples):
        e, t = samples[i % len(samples)]
        base = network.term(e, t)
        e1, t1 = _shift(e, t, G, A, sk, rng)
        e2, t2 = _shift(e1, t1, G, A, sk, rng)
        for shifted in (network.term(e1, t1), network.term(e2, t2)):
            if shifted != base:
                raise ReductionSelfCheckFailed(
                    f"normalized 10j action changed under a gauge shift on sample {i} of {cat.name!r}: "
                    f"{format_exact(base)} became {format_exact(shifted)}"
                )
    return options.self_check_samples


def compute(
    o: OrderedOrientedComplex, cat: Fusion2CatData, options: Optional[StateSumOptions] = None
) -> StateSumResult:
    """The state sum with bookkeeping, in the mode named by ``options``."""
    options = options or StateSumOptions()
    if options.reverse_orientation:
        o = reverse_orientation(o)
    network = FacetNetwork(o, cat)
    meta: Dict[str, object] = {"facets": len(network.facets), "tets": len(network.skeleton.tets)}
    if options.mode == "full":
        order = search_order(o)
        value, states, tasks = _enumerate(network, order, {}, {}, options)
        factor = ONE
    else:
        cut = gauge_slice(o, cat)
        order = search_order(o, tuple(cut.edges), tuple(cut.triangles))
        checked = self_check_reduction(network, order, cut, options)
        meta.update(
            {
                "fixed_edges": len(cut.edges),
                "fixed_triangles": len(cut.triangles),
                "self_check": checked,
                "rng": RNG_ALGORITHM,
                "seed": options.seed,
            }
        )
        partial, states, tasks = _enumerate(network, order, cut.edges, cut.triangles, options)
        factor = cut.factor
        value = partial * factor
    if network._plans:
        meta["max_plan_size"] = max(p.max_size for p in network._plans.values())
    if options.verbose:
        print_color(
            f"{options.mode} state sum of {cat.name!r}: {states} states in {tasks} tasks, "
            f"Z = {format_exact(value)}",
            color="green",
        )
    return StateSumResult(value, options.mode, states, tasks, factor, meta)


def state_sum(
    o: OrderedOrientedComplex, cat: Fusion2CatData, options: Optional[StateSumOptions] = None
) -> Cyclotomic:
    """Z_C(K), exact."""
    return compute(o, cat, options).value


def state_sum_reduced(
    o: OrderedOrientedComplex, cat: Fusion2CatData, options: Optional[StateSumOptions] = None
) -> Cyclotomic:
    """Z_C(K) summed over one state per gauge orbit, times the orbit size.

    Raises:
        ReductionSelfCheckFailed: if a term is not invariant under gauge shifts on this instance
    """
    return compute(o, cat, replace(options or StateSumOptions(), mode="reduced")).value


def gauge_transform_test(
    o: OrderedOrientedComplex,
    cat: Fusion2CatData,
    rescaling: BasisRescaling,
    compensate: bool = True,
    options: Optional[StateSumOptions] = None,
) -> Report:
    """PASS iff Z is unchanged when the category is presented in rescaled bases."""
    report = Report(f"basis rescaling of {cat.name}".strip())
    report.meta.update({"compensate": compensate, "rescaling_seed": rescaling.seed})
    if rescaling.seed is not None:
        report.meta["rng"] = RNG_ALGORITHM
    before = state_sum(o, cat, options)
    after = state_sum(o, gauge_transformed(cat, rescaling, compensate), options)
    report.meta["Z"] = before
    if before == after:
        report.ok("state sum unchanged", f"Z = {format_exact(before)}")
    else:
        report.fail(
            "state sum unchanged",
            f"{format_exact(before)} became {format_exact(after)}",
            {"constant": rescaling.constant, "seed": rescaling.seed},
        )
    return report



from __future__ import annotations

from itertools import combinations, product

import pytest

from gfree import (
    BadSizeError,
    BaseNotFreeError,
    ConstantedGraph,
    ExistentialFormula,
    Graph,
    NotAnExtensionError,
    UnknownConstantError,
    VertexMap,
    cycle_graph,
    enumerate_extensions,
    eval_existential,
    find_induced_embedding,
    graph_classes,
    is_isomorphic,
    make_graph,
    path_graph,
    phi_formula,
    relabel,
    type_fragment,
)

P3 = path_graph(3)
C3 = cycle_graph(3)
K1_A = make_graph(["a"], [])
EMPTY = ConstantedGraph(make_graph([], []), ())


def _fresh_named(n: int, edges) -> ConstantedGraph:
    return ConstantedGraph(make_graph([str(i) for i in range(n)], edges), ())


def _eval_product_oracle(phi: ExistentialFormula, target: ConstantedGraph) -> bool:
    """Check every assignment of target vertices to bound variables directly."""
    g = target.graph
    for assign in product(g.vertices, repeat=phi.bound_count):
        def val(t):
            return t if isinstance(t, str) else assign[t]

        if all(g.has_edge(val(a), val(b)) == pol for a, b, pol in phi.literals):
            return True
    return phi.bound_count == 0 and all(
        g.has_edge(a, b) == pol for a, b, pol in phi.literals
    )


def _reconstruct(phi: ExistentialFormula) -> Graph:
    names = list(phi.constants) + [f"x{i}" for i in range(phi.bound_count)]

    def nm(t):
        return t if isinstance(t, str) else f"x{t}"

    return make_graph(names, [(nm(a), nm(b)) for a, b, pol in phi.literals if pol])


def test_formula_validation() -> None:
    ExistentialFormula(1, ("a",), (("a", 0, True),))
    with pytest.raises(ValueError):
        ExistentialFormula(1, ("a",), (("a", 5, True),))
    with pytest.raises(ValueError):
        ExistentialFormula(0, ("a",), (("a", "b", True),))
    with pytest.raises(ValueError):
        ExistentialFormula(1, (), ((0, 0, True),))


def test_constanted_graph_validation() -> None:
    from gfree import DuplicateVertexError, UnknownVertexError

    ConstantedGraph(P3, ("g0",))
    with pytest.raises(UnknownVertexError):
        ConstantedGraph(P3, ("zz",))
    with pytest.raises(DuplicateVertexError):
        ConstantedGraph(P3, ("g0", "g0"))


def test_render_format() -> None:
    phi = ExistentialFormula(2, ("a",), (("a", 0, True), ("a", 1, False), (0, 1, True)))
    assert phi.render() == "E x0 x1 . a-x0 & !(a-x1) & x0-x1"
    assert ExistentialFormula(0, (), ()).render() == "true"


def test_enumerate_extensions_k0_is_base() -> None:
    base = ConstantedGraph(K1_A, ("a",))
    assert enumerate_extensions(base, P3, 0) == [base]


def test_enumerate_extensions_k1_of_k1() -> None:
    base = ConstantedGraph(K1_A, ("a",))
    exts = enumerate_extensions(base, P3, 1)
    assert len(exts) == 3
    proper = [e for e in exts if e.graph.n == 2]
    assert len(proper) == 2
    assert sorted(e.graph.m for e in proper) == [0, 1]
    assert all(e.graph.vertices == ("a", "0") for e in proper)


def test_enumerate_extensions_k2_never_pendant_on_edge() -> None:
    k2 = make_graph(["a", "b"], [("a", "b")])
    base = ConstantedGraph(k2, ("a", "b"))
    for ext in enumerate_extensions(base, P3, 1):
        for fresh in set(ext.graph.vertices) - {"a", "b"}:
            adj = {u for u in ("a", "b") if ext.graph.has_edge(fresh, u)}
            assert len(adj) != 1


def test_enumerate_extensions_rejects_unfree_base() -> None:
    with pytest.raises(BaseNotFreeError):
        enumerate_extensions(ConstantedGraph(P3, ()), P3, 1)


def test_enumerate_extensions_pin_base_but_not_fresh() -> None:
    two = make_graph(["u", "v"], [])
    base = ConstantedGraph(two, ("u", "v"))
    exts = enumerate_extensions(base, P3, 1)
    assert len(exts) == 4
    pendants = [e for e in exts if e.graph.m == 1]
    assert {next(iter(e.graph.edges)) for e in pendants} == {("0", "u"), ("0", "v")}
    fresh_swap = enumerate_extensions(EMPTY, P3, 2)
    kinds = sorted(e.graph.m for e in fresh_swap if e.graph.n == 2)
    assert kinds == [0, 1]


def test_enumerate_extensions_matches_clique_partition_counts() -> None:
    def partitions(n: int, cap: int | None = None) -> int:
        if n == 0:
            return 1
        cap = n if cap is None else cap
        return sum(partitions(n - i, min(i, n - i)) for i in range(min(cap, n), 0, -1))

    for k in range(6):
        got = enumerate_extensions(EMPTY, P3, k)
        want = sum(partitions(j) for j in range(k + 1))
        assert len(got) == want


def test_enumerate_extensions_deterministic() -> None:
    base = ConstantedGraph(K1_A, ("a",))
    assert enumerate_extensions(base, C3, 2) == enumerate_extensions(base, C3, 2)


def test_phi_formula_k2_over_empty() -> None:
    ext = _fresh_named(2, [("0", "1")])
    assert phi_formula(ext, EMPTY).render() == "E x0 x1 . x0-x1"


def test_phi_formula_2k1_over_empty() -> None:
    ext = _fresh_named(2, [])
    assert phi_formula(ext, EMPTY).render() == "E x0 x1 . !(x0-x1)"


def test_phi_formula_p3_over_k1() -> None:
    base = ConstantedGraph(K1_A, ("a",))
    ext = ConstantedGraph(
        make_graph(["a", "0", "1"], [("a", "0"), ("0", "1")]), ("a",)
    )
    assert phi_formula(ext, base).render() == "E x0 x1 . a-x0 & !(a-x1) & x0-x1"


def test_phi_formula_rejects_non_extension() -> None:
    base = ConstantedGraph(K1_A, ("a",))
    with pytest.raises(NotAnExtensionError):
        phi_formula(ConstantedGraph(make_graph(["b", "0"], []), ()), base)
    k2_base = ConstantedGraph(make_graph(["a", "b"], [("a", "b")]), ("a", "b"))
    broken = ConstantedGraph(make_graph(["a", "b", "0"], []), ("a", "b"))
    with pytest.raises(NotAnExtensionError):
        phi_formula(broken, k2_base)


def test_eval_examples() -> None:
    phi_k2 = phi_formula(_fresh_named(2, [("0", "1")]), EMPTY)
    assert eval_existential(phi_k2, ConstantedGraph(P3, ()))
    phi_k3 = phi_formula(_fresh_named(3, [("0", "1"), ("1", "2"), ("0", "2")]), EMPTY)
    assert not eval_existential(phi_k3, ConstantedGraph(cycle_graph(4), ()))
    assert eval_existential(ExistentialFormula(0, (), ()), ConstantedGraph(K1_A, ()))


def test_eval_unknown_constant() -> None:
    phi = ExistentialFormula(0, ("zz",), ())
    with pytest.raises(UnknownConstantError):
        eval_existential(phi, ConstantedGraph(K1_A, ("a",)))


def test_eval_variables_may_coincide() -> None:
    phi_2k1 = phi_formula(_fresh_named(2, []), EMPTY)
    assert eval_existential(phi_2k1, ConstantedGraph(K1_A, ()))
    assert find_induced_embedding(make_graph(["u", "v"], []), K1_A, VertexMap(())) is None


def test_eval_matches_product_oracle() -> None:
    targets = [ConstantedGraph(g, ()) for g in graph_classes(4)]
    patterns = [
        _fresh_named(2, []),
        _fresh_named(2, [("0", "1")]),
        _fresh_named(3, [("0", "1"), ("1", "2")]),
        _fresh_named(3, [("0", "1"), ("1", "2"), ("0", "2")]),
        _fresh_named(4, [("0", "1"), ("2", "3")]),
    ]
    for ext in patterns:
        phi = phi_formula(ext, EMPTY)
        for target in targets:
            assert eval_existential(phi, target) == _eval_product_oracle(phi, target)


def test_eval_with_constants_matches_product_oracle() -> None:
    base = ConstantedGraph(K1_A, ("a",))
    exts = enumerate_extensions(base, P3, 2)
    targets = [
        ConstantedGraph(make_graph(["a", "p", "q"], [("a", "p")]), ("a",)),
        ConstantedGraph(make_graph(["a", "p", "q"], [("a", "p"), ("a", "q")]), ("a",)),
        ConstantedGraph(make_graph(["a"], []), ("a",)),
    ]
    for ext in exts:
        phi = phi_formula(ext, base)
        for target in targets:
            assert eval_existential(phi, target) == _eval_product_oracle(phi, target)


def _digit_named(g: Graph) -> ConstantedGraph:
    f = VertexMap.from_dict({v: str(i) for i, v in enumerate(g.vertices)})
    return ConstantedGraph(relabel(g, f), ())


def test_embedding_implies_eval() -> None:
    pool = [g for n in range(1, 5) for g in graph_classes(n)]
    patterns = [_digit_named(g) for g in graph_classes(3)]
    for raw in patterns:
        phi = phi_formula(raw, EMPTY)
        for host in pool:
            embeds = find_induced_embedding(raw.graph, host, VertexMap(())) is not None
            if embeds:
                assert eval_existential(phi, ConstantedGraph(host, ()))


def test_eval_equals_embedding_for_twin_free_patterns() -> None:
    def has_false_twins(g: Graph) -> bool:
        return any(
            not g.has_edge(u, v) and set(g.neighbors(u)) == set(g.neighbors(v))
            for u, v in combinations(g.vertices, 2)
        )

    pool = [g for n in range(1, 5) for g in graph_classes(n)]
    patterns = [_digit_named(g) for g in graph_classes(3) + graph_classes(2)]
    for raw in patterns:
        if has_false_twins(raw.graph):
            continue
        phi = phi_formula(raw, EMPTY)
        for host in pool:
            embeds = find_induced_embedding(raw.graph, host, VertexMap(())) is not None
            assert eval_existential(phi, ConstantedGraph(host, ())) == embeds


def test_type_fragment_c4_example() -> None:
    frag = type_fragment(ConstantedGraph(cycle_graph(4), ()), C3, 4)
    shapes = [_reconstruct(phi) for phi in frag]
    assert any(is_isomorphic(s, cycle_graph(4)) is not None for s in shapes)
    assert all(is_isomorphic(s, cycle_graph(5)) is None for s in shapes)


def test_type_fragment_k1_k0() -> None:
    frag = type_fragment(ConstantedGraph(K1_A, ()), C3, 0)
    assert [phi.render() for phi in frag] == ["true"]


def test_type_fragment_monotone_under_induced_extension() -> None:
    small = ConstantedGraph(P3, ())
    big = ConstantedGraph(cycle_graph(4), ())
    for k in range(4):
        frag_small = set(type_fragment(small, C3, k))
        frag_big = set(type_fragment(big, C3, k))
        assert frag_small <= frag_big


def test_type_fragment_negative_k() -> None:
    with pytest.raises(BadSizeError):
        enumerate_extensions(EMPTY, C3, -1)


def test_small_index_sets_have_distinct_fragments() -> None:
    from gfree import antichain_graph

    targets = {}
    for index_set in [frozenset({0}), frozenset({1}), frozenset({0, 1})]:
        targets[index_set] = ConstantedGraph(antichain_graph(C3, index_set), ())
    frags = {i: frozenset(type_fragment(t, C3, 6)) for i, t in targets.items()}
    for i, j in combinations(frags, 2):
        assert frags[i] != frags[j]

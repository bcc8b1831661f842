import pytest

import maxedgecolor as mec


def path(n):
    return mec.Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return mec.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_roundtrip():
    g = cycle(5)
    text = mec.render_graph(g)
    assert text.splitlines()[0] == "p edge 5 5"
    assert mec.load_graph(text) == g
    assert g.neighbors(0) == [1, 4]


def test_parse_error_reports_line():
    with pytest.raises(mec.ParseError, match="line 2"):
        mec.load_graph("p edge 2 1\ne 1 3\n")


def test_solve_cycle():
    g = cycle(6)
    colors = mec.solve(g, 6)
    assert colors is not None
    report = mec.verify(g, colors)
    assert report.valid and report.colors_used == 6
    assert mec.solve(g, 7) is None


def test_solve_matches_oracles():
    for seed in range(5):
        g = mec.gen_random(7, 0.4, seed)
        sigma, witness = mec.sigma_frontier(g)
        assert mec.verify(g, witness).colors_used == sigma
        assert mec.solve(g, sigma) is not None
        assert mec.solve(g, sigma + 1) is None
        if g.num_edges <= 12:
            assert mec.sigma_exact(g)[0] == sigma


def test_sigma_exact_refuses_large_inputs():
    g = cycle(13)
    with pytest.raises(mec.EdgeLimitExceeded):
        mec.sigma_exact(g)
    assert mec.sigma_exact(g, edge_limit=13)[0] == 13


def test_profiles():
    star = mec.Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert mec.sigma_exact(star, q=1)[0] == 1
    assert mec.sigma_exact(star, q=3)[0] == 3
    assert mec.sigma_exact(star, f=[2, 1, 1, 1])[0] == 2
    assert not mec.verify(star, [0, 1, 2])


def test_kernel_and_lift():
    g = mec.gen_random(40, 0.3, 11)
    result = mec.kernelize(g, 3, "dual")
    assert result.verdict in ("reduced", "yes", "no")
    hub = mec.Graph(30, [(i % 2, i) for i in range(2, 30)])
    kernel = mec.kernelize(hub, 4)
    assert kernel.verdict == "reduced"
    assert kernel.graph.num_vertices < hub.num_vertices
    reduced = mec.solve(kernel.graph, kernel.threshold)
    assert reduced is not None
    lifted = mec.lift_coloring(hub, kernel, reduced)
    report = mec.verify(hub, lifted)
    assert report.valid and report.colors_used >= 4


def test_c4free_refusal():
    with pytest.raises(mec.C4Found):
        mec.kernelize(cycle(4), 2, "c4free")


def test_generators_are_deterministic():
    assert mec.gen_random(20, 0.2, 7) == mec.gen_random(20, 0.2, 7)
    t = mec.gen_two_factor(12, 3)
    assert all(t.degree(v) == 2 for v in range(12))


def test_approx_coloring_is_valid():
    g = mec.gen_random(15, 0.3, 2)
    assert mec.verify(g, mec.approx_coloring(g)).valid

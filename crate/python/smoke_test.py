"""Smoke test for the Python bindings: solve, verify, suns and oracles."""

import json

import longcycles_py as lc


def two_joined_cycles(length):
    edges = [(i, (i + 1) % length) for i in range(length)]
    edges += [(length + i, length + (i + 1) % length) for i in range(length)]
    edges.append((0, length))
    return lc.Graph(2 * length, edges)


def test_packing_round_trip():
    g = two_joined_cycles(5)
    cert = json.loads(lc.solve(g, 2, 5))
    assert cert["type"] == "packing"
    assert len(cert["cycles"]) == 2
    valid, diagnostics = lc.verify(g, json.dumps(cert))
    assert valid, diagnostics


def test_hitting_set_round_trip():
    g = two_joined_cycles(5)
    cert = json.loads(lc.solve(g, 3, 5))
    assert cert["type"] == "hitting_set"
    assert len(cert["edges"]) <= cert["f_bound"] == lc.f_bound(3, 5)
    assert lc.verify(g, json.dumps(cert))[0]
    cert["edges"] = []
    valid, diagnostics = lc.verify(g, json.dumps(cert))
    assert not valid and diagnostics


def test_bounds_and_suns():
    assert lc.f_bound(1, 9) == 0
    assert lc.f_bound(2, 3) == 870
    assert lc.f_bound(4, 5) == 6870
    sun = lc.make_sun(17)
    assert (sun.n, sun.m) == (20, 65)
    assert lc.max_packing(lc.make_sun(8), 8)[0] == 1


def test_oracles_and_parsing():
    g = lc.Graph.from_edge_list("3 3\n0 1\n1 2\n2 0\n")
    assert lc.Graph.from_edge_list(g.to_edge_list()).edges() == [(0, 1), (1, 2), (2, 0)]
    assert lc.min_hitting(g, 3) == (1, [0])
    assert lc.max_packing(g, 4) == (0, [])


def test_errors():
    for bad in (lambda: lc.Graph(2, [(0, 5)]), lambda: lc.make_sun(3), lambda: lc.solve(lc.Graph(1, []), 0, 3)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    g = lc.Graph.from_edge_list(lc.make_sun(12).to_edge_list())
    try:
        lc.solve(g, 2, 12, budget_nodes=3)
    except lc.BudgetExceeded:
        pass
    else:
        raise AssertionError("expected BudgetExceeded")


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print("ok", name)

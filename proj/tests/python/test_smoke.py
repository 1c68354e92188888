import pytest

import chaincut


def test_example1_delays():
    net, req = chaincut.example1()
    assert chaincut.solve(net, req, "noredundancy")["delay"] == "3/1"
    greedy = chaincut.solve(net, req, "greedy")
    assert greedy["delay"] == "2/1"
    assert greedy["placement"] == [["v11", "v12"], ["v21", "v22"]]


def test_certify_greedy_placement():
    net, req = chaincut.example1()
    placement = chaincut.solve(net, req, "greedy")["placement"]
    cert = chaincut.certify(net, req, placement, seed=7)
    assert cert["achieved"]
    assert all(r["achieved"] for r in cert["rounds"])


def test_max_flow_matches_layered_width():
    net, _ = chaincut.example2(3, 2)
    assert chaincut.max_flow(net, "s", "d") == "3"


def test_generator_is_deterministic():
    assert chaincut.gen_layered(3, 2, seed=5) == chaincut.gen_layered(3, 2, seed=5)
    assert chaincut.gen_layered(3, 2, seed=5) != chaincut.gen_layered(3, 2, seed=6)


def test_unknown_node_is_rejected():
    net, req = chaincut.example1()
    req["placements"][0].append("nowhere")
    with pytest.raises(ValueError):
        chaincut.solve(net, req, "greedy")

import pytest

import planerig


def test_graph_round_trip():
    g = planerig.Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert g.order == 4
    assert len(g) == 4
    assert g.graph6() == "Cl"
    assert planerig.Graph.from_graph6("Cl") == g
    assert planerig.complete(4).graph6() == "C~"


def test_errors_map_to_python_exceptions():
    with pytest.raises(planerig.ParseError):
        planerig.Graph.from_graph6("C")
    with pytest.raises(planerig.PreconditionError):
        planerig.h_independent(planerig.complete(3), 4)
    with pytest.raises(planerig.CapExceeded):
        planerig.find_bernstein_orientation(planerig.cycle(11))


def test_k33():
    k33 = planerig.complete_bipartite(3, 3)
    assert planerig.r_independent(k33)
    verdict = planerig.h_independent(k33, 0)
    assert verdict["independent"] is False
    assert verdict["method"] == "symbolic"
    assert verdict["rank"] == 8
    assert planerig.find_bernstein_orientation(k33) is None


def test_orientation_and_configuration():
    pet = planerig.petersen()
    d = planerig.find_bernstein_orientation(pet)
    assert d is not None
    assert planerig.is_bernstein(d, pet.order)
    c4 = planerig.cycle(4)
    conf = planerig.ufp_configuration(c4, planerig.find_bernstein_orientation(c4))
    report = planerig.verify_ufp(conf, c4.order)
    assert report["passed"]
    assert report["forests"] and report["out_degree"] and report["bernstein"]
    assert report["recoverable"] is True


def test_counts_and_ranks():
    assert [len(planerig.generate_connected_cubic(n)) for n in (4, 6, 8)] == [1, 2, 5]
    assert planerig.r_rank(planerig.complete(5)) == 7
    assert planerig.h_rank_symbolic(planerig.complete(4), 0) == 5
    duality = planerig.check_duality(4, 0)
    assert duality["passed"]
    assert duality["h_bases"] == duality["w_bases"] == 6


def test_run_suite():
    report = planerig.run_suite("k33")
    assert report["status"] == "pass"
    assert report["instances"] == 5
    assert report["failures"] == []

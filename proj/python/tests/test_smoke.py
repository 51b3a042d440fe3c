import json

import pytest

import psf


def boundary5():
    return psf.boundary_simplex(5)


def test_invariants_of_the_simplex_boundary():
    K = boundary5()
    assert psf.f_vector(K) == [1, 6, 15, 20, 15, 6]
    assert psf.h_vector(K) == [1, 1, 1, 1, 1, 1]
    assert psf.g2(K) == 0 and psf.g3(K) == 0
    assert psf.is_normal_pseudomanifold(K)
    assert all(verdict == "non-singular" for _, verdict, _ in psf.classify_vertices(K))


def test_join_of_triangle_boundaries():
    J = psf.join(psf.Complex([[0, 1], [1, 2], [0, 2]]), psf.Complex([[3, 4], [4, 5], [3, 5]]))
    assert psf.f_vector(J) == [1, 6, 15, 18, 9]
    assert psf.g2(J) == 1


def test_facet_round_trip():
    K = psf.stacked_sphere(4, 3, seed=2)
    assert psf.parse_facets(psf.print_facets(K)) == K
    with pytest.raises(psf.PsfError) as err:
        psf.parse_facets("0 1 2\n0 1 x\n")
    assert err.value.args[0] == "ParseError"


def test_vertex_fold_law_and_decomposition():
    S = psf.stacked_chain(4, 12, focus=[0], seed=1)
    pair = psf.find_vertex_fold(S, at=0, seed=1)
    assert pair is not None
    K = psf.vertex_fold(S, *pair)
    assert psf.g2(K) - psf.g2(S) == 10
    assert psf.g3(K) - psf.g3(S) == -10
    assert psf.optimality_check(K, 0) == (True, True)
    tree = psf.decompose(K, 0, mode="one-singularity")
    assert tree.counters["n"] == 1 and tree.counters["m"] == 0
    assert psf.rebuild(tree) == K
    again = psf.DecompositionTree.from_json(tree.to_json())
    assert psf.rebuild(again) == K


def test_edge_fold_classification():
    S = psf.stacked_chain(4, 10, focus=[0, 1], seed=0)
    src, dst = psf.find_edge_fold(S, along=[0, 1], seed=0)
    K = psf.edge_fold(S, src, dst)
    cls = psf.classify_missing_facet(K, src)
    assert cls["kind"] == "edge-fold" and cls["edge"] == (0, 1)
    assert psf.g2(K) == 6


def test_errors_carry_codes():
    with pytest.raises(psf.PsfError) as err:
        psf.decompose(psf.boundary_simplex(4), 0)
    assert err.value.args[0] == "DimensionMismatch"


def test_build_script_ledger():
    script = {
        "version": 1,
        "steps": [
            {"op": "stacked_chain", "args": {"d": 4, "k": 12, "focus": [0], "seed": 1}},
            {"op": "vertex_fold", "args": {"vertex": 0, "seed": 1}},
        ],
    }
    K, ledger = psf.run_script(json.dumps(script))
    assert [e["dg2"] for e in ledger] == [0, 10]
    assert all(e["ok"] for e in ledger)
    _, skewed = psf.run_script(json.dumps(script), fault=True)
    assert not skewed[1]["ok"]


def test_identity_harness():
    exact, tallies = psf.verify_identities(seeds=5, ops=6)
    assert exact
    assert all(failed == 0 for _, failed in tallies.values())


def test_one_vertex_suspension_of_the_4_simplex_boundary():
    assert psf.is_isomorphic(psf.one_vertex_suspension(psf.boundary_simplex(4), 0), boundary5()) is not None

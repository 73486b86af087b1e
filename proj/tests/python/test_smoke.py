import os
import pathlib

import pytest

import qrec

FIXTURES = pathlib.Path(os.environ.get("QREC_FIXTURE_DIR", pathlib.Path(__file__).parents[1] / "fixtures"))


@pytest.fixture(scope="module")
def a2():
    return qrec.Quiver(["4", "1"], [("a", "4", "1")])


@pytest.fixture(scope="module")
def ctx():
    return qrec.SplitContext(qrec.load_split(str(FIXTURES / "a4_split.json")))


def test_universe_names(a2):
    u = qrec.all_indecomposables(a2)
    assert u.names == ["4", "1", "4/1"]
    assert u.complete
    assert len(qrec.all_indecomposables(qrec.load_quiver(str(FIXTURES / "a4_split.json")))) == 10


def test_hom_ext_euler(a2):
    s4 = qrec.Rep.simple(a2, 2, "4")
    s1 = qrec.Rep.simple(a2, 2, "1")
    p = qrec.Rep(a2, 2, [1, 1], {"a": [[1]]})
    assert qrec.hom_dim(s1, p) == 1
    assert qrec.hom_dim(s4, p) == 0
    assert qrec.ext_dim(s4, s1) == 1
    assert qrec.euler_pairing(a2, [1, 0], [0, 1]) == -1
    assert qrec.is_brick(p)
    assert not qrec.is_isomorphic(p, qrec.direct_sum([s4, s1]))
    assert len(qrec.decompose(qrec.direct_sum([s4, s1]))) == 2
    assert p.matrix("a") == [[1]]


def test_bad_shape_raises(a2):
    with pytest.raises(qrec.ContractViolation):
        qrec.Rep(a2, 2, [1, 1], {"a": [[1, 0]]})


def test_ice_enumeration(a2):
    u = qrec.all_indecomposables(a2)
    found = [str(s) for s in qrec.enumerate_subcats(u, "ice")]
    assert found == ["add{0}", "add{4}", "add{1}", "add{4/1}", "add{4,4/1}", "add{4,1,4/1}"]
    bad = qrec.Subcat(u, ["1", "4/1"])
    assert not bad.is_ice()
    assert "cokernel 4" in bad.violation("ice")


def test_transfer_and_hypotheses(ctx):
    out, passed, _ = ctx.transfer("preimage_j", ["2", "2/3"])
    assert passed
    assert len(out) == 9
    with pytest.raises(qrec.HypothesisFailed):
        ctx.transfer("from_j_side_star", ["2"])


def test_bijection(ctx):
    rep = ctx.verify_bijection()
    assert rep["passed"]
    assert len(rep["ambient_side"]) == 6 and len(rep["j_side"]) == 6


def test_axioms_and_mutation(ctx):
    checks = ctx.recollement.verify_axioms(samples=20, seed=1, max_dim=2)
    assert all(c["failures"] == 0 for c in checks.values())
    bad = ctx.recollement.mutated().verify_axioms(samples=20, seed=1, max_dim=2)
    assert any(c["failures"] > 0 for c in bad.values())


def test_exactness(ctx):
    e = ctx.recollement.exactness()
    assert e == {"i^*": True, "i^!": False, "j_!": True, "j_*": False}


def test_tables_match_cli(ctx):
    code, out, _ = qrec.run_cli(["reproduce", str(FIXTURES / "a4_split.json")])
    assert code == 0
    assert out == ctx.example_tables()


def test_cli_exit_code_for_bad_split():
    code, _, err = qrec.run_cli(["verify", str(FIXTURES / "mixed_split.json")])
    assert code == 2
    assert err

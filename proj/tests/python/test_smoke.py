import pytest

import qsymp


def test_fixture_parameters():
    assert qsymp.params(qsymp.fixture("repetition")) == {"n": 2, "k": 1, "s": 2, "d": 1, "maxwt": 2}
    assert qsymp.params(qsymp.fixture("shor"))["d"] == 3
    code, logical = qsymp.subsystem_code(["XXII", "IIXX", "ZIZI", "IZIZ"])
    assert logical == 1
    assert code == qsymp.fixture("bacon-shor")


def test_code_from_rows_matches_pauli():
    rows = [[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 0, 0]]
    code = qsymp.Code(2, 2, rows)
    assert code.k == 1 and code.s == 2 and code.dim_f == 3
    assert code.radical() == qsymp.Code.from_pauli(["ZZ"])
    assert not code.radical().is_stabilizer
    assert code.is_stabilizer


def test_invariants_and_enumerators():
    bs = qsymp.fixture("bacon-shor")
    assert qsymp.profiles(bs) == {"theta": [0, 0, 0, 2, 2], "phi": [0, 0, 2, 2, 2]}
    assert qsymp.generalized_weights(bs)["varphi"] == [2, 2]
    rep = qsymp.fixture("repetition")
    assert qsymp.weight_distribution(rep) == [1, 2, 5]
    assert qsymp.binomial_moments(rep) == [1, 4, 8]
    assert qsymp.enumerators(rep)["b"] == "y^2 + 2xy + 5x^2"
    assert qsymp.alpha(rep, [1]) == 0 and qsymp.beta(rep, [1]) == 1


def test_puncture_and_shorten():
    rep = qsymp.fixture("repetition")
    assert qsymp.puncture(rep, [1]).dim_f == 2
    assert qsymp.shorten(rep, [1]).paulis() == ["Z"]


def test_errors():
    with pytest.raises(qsymp.CommutationViolation):
        qsymp.stabilizer_code(["XX", "ZZ", "ZI"])
    with pytest.raises(qsymp.ParseError):
        qsymp.Code.from_pauli(["XQ"])
    with pytest.raises(qsymp.BudgetExceeded):
        qsymp.weight_distribution(qsymp.fixture("shor"), budget=10)
    with pytest.raises(qsymp.DimensionMismatch):
        qsymp.Code(3, 2, [[1, 0, 0]])
    with pytest.raises(qsymp.Error):
        qsymp.fixture("steane")


def test_verify_is_deterministic():
    first = qsymp.verify("enumerators", seed=3, random_codes=2)
    assert first == qsymp.verify("enumerators", seed=3, random_codes=2)
    assert first["summary"]["failures"] == 0
    assert [c["name"] for c in first["codes"]][:3] == ["repetition", "bacon-shor", "shor"]

import pytest

import shintani

ODD = {"n": 1, "p": 3, "M": 4, "terms": [{"residue": [1], "weight": 1}, {"residue": [3], "weight": -1}]}
ODD2 = {
    "n": 2,
    "p": 3,
    "M": 4,
    "terms": [{"residue": [1, y], "weight": 1} for y in range(4)] + [{"residue": [3, y], "weight": -1} for y in range(4)],
}
PROD = {
    "n": 2,
    "p": 3,
    "M": 4,
    "terms": [{"residue": [x, y], "weight": sx * sy} for x, sx in ((1, 1), (3, -1)) for y, sy in ((1, 1), (3, -1))],
}
I2 = [[1, 0], [0, 1]]
ROT = [[0, -1], [1, 0]]
TR = [[1, -1], [1, 0]]


def test_pair_and_vh():
    a = shintani.pair(ODD, [[1]])
    assert a["denominator"] == [[4]]
    assert {t["coeff"] for t in a["numerator"]} == {"1", "-1"}
    assert shintani.check_vh(ODD, [1])
    assert not shintani.check_vh({"n": 1, "p": 3, "M": 4, "terms": [{"residue": [1], "weight": 1}]}, [1])


def test_pseudo_measure_identities():
    left = {"numerator": [{"vector": [0], "coeff": "1"}], "denominator": [[3]]}
    right = {"numerator": [{"vector": [0], "coeff": "1"}], "denominator": [[-3]]}
    ones = shintani.pair_cone_function(
        {"n": 1, "p": 3, "M": 1, "terms": [{"residue": [0], "weight": 1}]},
        [{"coeff": "1", "generators": [["1"]]}, {"coeff": "1", "generators": [["-1"]]}, {"coeff": "1", "generators": []}],
    )
    assert shintani.pm_is_integer_constant(ones, 1) == 0
    assert shintani.pm_eq(left, {"numerator": [{"vector": [0], "coeff": "1"}, {"vector": [3], "coeff": "1"}], "denominator": [[6]]})
    assert not shintani.pm_eq(left, right)


def test_deformed_cones_and_psi():
    k = shintani.deformed_cone_decompose([[1, 0], [0, 1]], ["-1/2", "1/3"])
    assert sorted(len(t["generators"]) for t in k) == [1, 2]
    assert shintani.psi_cdg([I2, I2], ["-1/2", "1/3"]) == []
    with pytest.raises(shintani.ShintaniError, match="NonGenericDeformation"):
        shintani.deformed_cone_decompose([[1, 0], [0, 1]], ["0", "1"])


def test_cocycle_and_equivariance():
    assert shintani.verify_cocycle(ODD2, [I2, ROT, TR], ["-1/2", "1/3"])
    assert shintani.verify_equivariance(ODD2, [[1, 4], [0, 1]], [I2, ROT], ["-1/2", "1/3"])
    with pytest.raises(shintani.ShintaniError, match="NotStabilizer"):
        shintani.verify_equivariance(ODD2, ROT, [I2, ROT], ["-1/2", "1/3"])
    mu = shintani.phi(PROD, [I2, ROT], ["-1/2", "-1/3"])
    assert shintani.is_measure_amice(mu, I2, 3, 20, 6)
    assert not shintani.is_measure_amice(shintani.phi(ODD2, [I2, ROT], ["-1/2", "-1/3"]), I2, 3, 20, 6)


def test_run_moments_and_errors():
    doc = {
        "p": 3,
        "n": 1,
        "pseudo_measure": {
            "numerator": [{"vector": [1], "coeff": "1"}, {"vector": [3], "coeff": "-1"}],
            "denominator": [[4]],
        },
    }
    code, report, _ = shintani.run("moments", doc, degree=6)
    assert code == 0
    assert [m["exact"] for m in report["moments"][:3]] == ["1/2", "0", "-1/2"]
    code, report, err = shintani.run("pair", {"cone": [[1]]})
    assert code == 2 and report is None and err
    code, report, _ = shintani.run("cocycle", {"test_function": ODD2}, trials=2, seed=5, degree=6)
    assert code == 0 and report["passed"]

import homwb
import pytest


def test_smith_identity():
    a = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    s = homwb.smith(a)
    assert s["diagonal"] == [2, 6, 12]
    u, d, v = s["u"], s["d"], s["v"]

    def mul(x, y):
        return [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))] for i in range(len(x))]

    assert mul(mul(u, a), v) == d


def test_smith_big_entries():
    s = homwb.smith([[10**30, 0], [0, 3]])
    assert s["diagonal"] == [1, 3 * 10**30]


def test_homology():
    circle = [["0", "1"], ["1", "2"], ["0", "2"]]
    assert homwb.homology(circle, n=1) == {"rank": 1, "torsion": []}
    disk = [["0", "1", "2"]]
    assert homwb.homology(disk, sub=circle, n=2) == {"rank": 1, "torsion": []}
    assert homwb.homology(circle, n=1, modulus=4) == {"rank": 0, "torsion": [4]}


def test_run_and_round_trip():
    text = "complex S1 = {01,12,02}\ncellular S1 skeletal Z\n"
    code, report = homwb.run(text)
    assert code == 0
    assert [r["rank"] for r in report["results"]] == [1, 1]
    assert report["input_digest"] == homwb.digest(text)
    printed = homwb.canonical(text)
    assert homwb.canonical(printed) == printed


def test_counterexample():
    text = (
        "complex P = {0}\npair (P, empty)\ncoeff Z/4\n"
        "sequent s: [x:h0(P,empty)] top |- exists y:h0(P,empty). y + y = x\nsequent\n"
    )
    code, report = homwb.run(text)
    assert code == 1
    assert report["counterexamples"][0]["assignment"][0]["value"] == "1"


def test_errors():
    with pytest.raises(homwb.InputError, match="column 16"):
        homwb.canonical("complex B = {0 1}\nvalidate\n")
    with pytest.raises(ValueError):
        homwb.run("complex P = {0}\nvalidate\n", coeff="Q")


def test_random_spec_is_deterministic():
    a = homwb.random_spec(7, "spectral")
    assert a == homwb.random_spec(7, "spectral")
    code, _ = homwb.run(a)
    assert code in (0, 1)

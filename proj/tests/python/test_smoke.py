import pytest

import kelc


def test_linear_complexity():
    s = kelc.Sequence(3, "10100000")
    assert kelc.linear_complexity(s) == 6
    assert kelc.linear_complexity(kelc.Sequence(3, "0xA0")) == 6
    assert s.weight == 2
    assert s.bits() == "10100000"
    assert s.fold().bits() == "1010"


def test_k_error():
    s = kelc.Sequence(3, "10100000")
    assert kelc.k_error_complexity(s, 1) == 6
    assert kelc.k_error_complexity(s, 2, method="exhaustive") == 0
    assert kelc.kmin(s) == 2
    assert kelc.profile(s, 2) == {"n": 3, "L": [6, 6, 0], "k_min": 2}


def test_counts_are_python_ints():
    assert kelc.n4_count(5, 25) == 486539264
    assert kelc.n4_count(6, 49) == 2**48 * 1941
    assert kelc.rueppel_count(9, 512) == 2**511
    assert kelc.classify(5, 21) == "P{r=4,m=3,j=4}"
    assert kelc.decompose(5, 25) == (3, 1)
    assert kelc.decompose(5, 16) is None
    assert kelc.p_mult(5, 3, 4) == 25801
    assert kelc.weight8_count(4, 3, 4) == 16


def test_table_and_oracle_agree_at_n3():
    table = kelc.full_table(3, 4)
    assert table == kelc.spectrum(3, 4, "even", "exhaustive")[:8]
    report = kelc.verify_counts(3, 4)
    assert report["match"]
    assert len(report["rows"]) == 8


def test_census_and_sampler():
    assert kelc.weight_census(3, 1) == {8: 8}
    s = kelc.sample_with_lc(5, 19, seed=3)
    assert kelc.linear_complexity(s) == 19


def test_errors():
    with pytest.raises(kelc.KelcError, match="InvalidLiteral"):
        kelc.Sequence(3, "1012000")
    with pytest.raises(ValueError):
        kelc.n4_count(5, 40)
    with pytest.raises(ValueError):
        kelc.spectrum(5, 4, "even", "fast")

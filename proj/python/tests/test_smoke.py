from fractions import Fraction

import latwalk


def test_count_excursions():
    assert latwalk.count("basketball", 2, 6) == "93"
    assert latwalk.count("dyck", 1, 6) == "5"
    assert latwalk.count("motzkin", 1, 5, walk_class="excursion") == "21"


def test_count_strictly_positive():
    got = [
        int(latwalk.count("basketball", 2, n, 0, 1, "strictly_positive"))
        for n in range(8)
    ]
    assert got == [0, 1, 1, 3, 7, 22, 65, 213]


def test_weighted_counts_are_exact_rationals():
    v = latwalk.count_exact(
        "weighted_motzkin", 1, 2, 0, 0, "excursion", ["1/2", "3", "2"]
    )
    assert v == Fraction(10)


def test_series_and_root():
    exc = latwalk.series("excursion", "basketball", 2, 7)
    assert exc == ["1", "0", "2", "2", "11", "24", "93", "272"]
    root = latwalk.series_exact("root", "basketball", 2, 3)
    assert root[1] == 1 and root[2] == Fraction(1, 2)


def test_formulas_agree():
    for n in range(20):
        assert latwalk.basketball_g01(n) == latwalk.g01_recurrence(n)
    assert latwalk.mnomial(4, 2, 3) == "10"
    assert latwalk.mock_mnomial(1, 2, 2) == "0"
    assert latwalk.general_positive_count("sym_with_zero", 2, 4, 1) == "20"


def test_meander_total():
    assert latwalk.meander_total("basketball", 2, 2) == "7"


def test_asymptotic_value_is_close():
    # The exact value has ~600 digits, so compare as exact fractions.
    exact = Fraction(int(latwalk.basketball_g01(1000)))
    approx = Fraction(latwalk.asymptotic("g01", 1000))
    assert abs(exact / approx - 1) < Fraction(1, 1000)


def test_links():
    assert latwalk.increasing_unary_binary(5, False) == 39
    assert latwalk.increasing_unary_binary(5, True) == 22
    assert latwalk.absorption_walk_count(3, 5) == "9"


def test_fixture_verification():
    report = latwalk.verify_fixtures("")
    assert report["checks"] > 200
    assert report["passes"] == report["checks"]
    assert report["failures"] == []

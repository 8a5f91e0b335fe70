import pytest

from schurcount import fixtures
from schurcount.algebra import IntPolynomial
from schurcount.counting import (
    OmegaTable,
    PrimeSpec,
    constant_term_check,
    count_schur_rings,
    num_divisors,
    omega_layer_closed_forms,
    omega_layer_odd,
    omega_odd,
    omega_odd_eval,
    omega_two,
    omega_two_layer,
    omega_two_s,
)
from schurcount.sequences import catalan, fibonacci, schroder

X = IntPolynomial.x()
ZERO = IntPolynomial()


def test_small_polynomials():
    assert omega_odd(0) == IntPolynomial.constant(1)
    assert str(omega_odd(1)) == "x"
    assert str(omega_odd(2)) == "x^2+x+1"
    assert str(omega_odd(3)) == "x^3+2x^2+4x+1"
    assert str(omega_odd(7)) == "x^7+6x^6+26x^5+73x^4+152x^3+222x^2+203x+8"


def test_layer_examples():
    assert str(omega_layer_odd(3, 1)) == "x^2+x+1"
    assert str(omega_layer_odd(4, 2)) == "x^2+2x+3"
    assert omega_layer_odd(5, 5) == IntPolynomial.constant(1)
    assert str(omega_layer_odd(5, 4)) == "x+3"


def test_polynomial_figure():
    for n, text in fixtures.omega_polynomial_strings().items():
        assert str(omega_odd(n)) == text


def test_layer_figure_apart_from_errata():
    errata = fixtures.omega_layer_errata()
    for n, row in fixtures.omega_layer_strings().items():
        for k, printed in enumerate(row, 1):
            got = str(omega_layer_odd(n, k))
            if (n, k) in errata:
                assert errata[(n, k)] == (printed, got)
            else:
                assert got == printed, (n, k)


def test_errata_follow_from_the_figure_itself():
    # each misprinted cell is recomputed from the printed rows on either side
    printed = fixtures.omega_layer_polys()
    errata = fixtures.omega_layer_errata()
    assert errata
    for (n, k), (bad, good) in errata.items():
        from_below = sum((printed[n - 1][j - 1] for j in range(k - 1, n)), ZERO)
        assert str(from_below) == good != bad
        if n + 1 in printed:
            above = printed[n + 1][k]
            siblings = sum((printed[n][j - 1] for j in range(k, n + 1) if j != k), ZERO)
            assert above - siblings == IntPolynomial.parse(good)


def test_two_routes_agree_odd():
    table = OmegaTable(30)
    for n in range(31):
        assert table.omega(n) == omega_odd(n, method="recursive")


def test_two_routes_agree_two():
    for n in range(2, 31):
        assert omega_two(n, method="layers") == omega_two(n, method="recursive")


def test_monic_and_subleading():
    for n in range(1, 31):
        f = omega_odd(n)
        assert f.is_monic() and f.degree == n
        assert f.coeff(n - 1) == n - 1


def test_constant_term_is_fibonacci():
    assert constant_term_check(1) == (0, 0)
    assert constant_term_check(8) == (13, 13)
    for n in range(1, 31):
        a, b = constant_term_check(n)
        assert a == b == fibonacci(n - 1)


def test_catalan_coefficient_identity():
    for n in range(2, 21):
        lhs = sum((omega_layer_odd(n, i) for i in range(2, n + 1)), ZERO)
        rhs = sum((catalan(i - 1) * omega_odd(n - i) for i in range(2, n + 1)), ZERO)
        assert lhs == rhs


def test_schroder_coefficient_identity():
    for n in range(3, 21):
        lhs = 2 * sum(omega_two_s(n, k) for k in range(3, n + 1))
        rhs = sum(schroder(i) * omega_two_layer(n - i, 2) for i in range(1, n - 1))
        assert lhs == rhs


def test_closed_forms():
    assert omega_layer_closed_forms(2)[1] == X
    assert str(omega_layer_closed_forms(5)[3]) == "x^2+3x+6"
    assert str(omega_layer_closed_forms(4)[1]) == "x^3+2x^2+4x+1"
    for n in range(2, 31):
        for k, poly in omega_layer_closed_forms(n).items():
            assert poly == omega_layer_odd(n, k)
    with pytest.raises(ValueError):
        omega_layer_closed_forms(1)


def test_eval_examples():
    assert omega_odd_eval(PrimeSpec(3, 10)) == 294888
    assert omega_odd_eval(PrimeSpec(17, 6)) == 50775
    assert omega_odd_eval(PrimeSpec(7, 1)) == 4


def test_odd_table():
    for (p, n), want in fixtures.odd_table().items():
        assert count_schur_rings(p, n) == want


def test_two_table():
    assert [omega_two(n) for n in range(1, 11)] == [1, 3, 10, 37, 151, 657, 2989, 14044, 67626, 332061]
    assert omega_two(0) == 1


def test_monotone_in_n():
    for p in (3, 5, 7, 11, 13, 17, 19):
        vals = [count_schur_rings(p, n) for n in range(11)]
        assert all(a < b for a, b in zip(vals, vals[1:]))


def test_two_layer_values():
    assert omega_two_layer(4, 3) == 3
    assert omega_two_s(4, 3) == 4
    assert omega_two_layer(3, 0) == 5


def test_two_layers_sum_to_total():
    for n in range(3, 15):
        total = omega_two_layer(n, 0) + omega_two_layer(n, 2)
        total += sum(omega_two_layer(n, k) + 2 * omega_two_s(n, k) for k in range(3, n + 1))
        assert total == omega_two(n)


def test_prime_spec_validation():
    assert PrimeSpec(13, 2).x == num_divisors(12) == 6
    with pytest.raises(ValueError):
        PrimeSpec(2, 3)
    with pytest.raises(ValueError):
        PrimeSpec(9, 3)
    with pytest.raises(ValueError):
        PrimeSpec(5, 3, x=2)


def test_errors():
    with pytest.raises(ValueError):
        omega_layer_odd(3, 4)
    with pytest.raises(ValueError):
        omega_layer_odd(-1, 0)
    with pytest.raises(ValueError):
        omega_odd(-1)
    with pytest.raises(ValueError):
        omega_odd(3, method="magic")
    with pytest.raises(ValueError):
        omega_two_layer(5, 1)
    with pytest.raises(ValueError):
        omega_two_s(5, 2)
    with pytest.raises(ValueError):
        omega_two(-2)
    with pytest.raises(ValueError):
        count_schur_rings(6, 2)

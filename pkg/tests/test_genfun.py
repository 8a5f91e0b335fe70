import json

import pytest

from schurcount.counting import omega_odd, omega_two
from schurcount.genfun import verify_gf_odd, verify_gf_two


def test_odd_identity():
    rep = verify_gf_odd(30)
    assert rep.ok and rep.first_mismatch_index is None
    assert verify_gf_odd(1).ok


def test_two_identity():
    rep = verify_gf_two(30)
    assert rep.ok and rep.first_mismatch_index is None
    assert verify_gf_two(1).ok


def test_odd_negative_control():
    bad = lambda n: omega_odd(n) + 1 if n == 5 else omega_odd(n)
    rep = verify_gf_odd(20, omega=bad)
    assert not rep.ok and rep.first_mismatch_index == 5


def test_two_negative_control():
    bad = lambda n: omega_two(n) - 3 if n == 4 else omega_two(n)
    rep = verify_gf_two(20, omega=bad)
    assert not rep.ok and rep.first_mismatch_index == 4


def test_report_json():
    assert json.loads(verify_gf_two(5).to_json()) == {"case": "two", "order": 5, "ok": True}
    bad = lambda n: omega_two(n) + (n == 2)
    assert json.loads(verify_gf_two(5, omega=bad).to_json())["first_mismatch_index"] == 2


@pytest.mark.parametrize("f", [verify_gf_odd, verify_gf_two])
def test_order_must_be_positive(f):
    with pytest.raises(ValueError):
        f(0)

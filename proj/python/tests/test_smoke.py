from fractions import Fraction

import pytest

import qjalg
from qjalg import e1, e2, e4, wp


def test_arithmetic_and_render():
    f = wp**2 - 5 * e4
    assert qjalg.eval(str(f)) == f
    assert f.weight() == 4
    assert (wp * e1).depth() == (0, 1)
    assert qjalg.Form("1/2") * 2 == 1
    assert (wp + e4).weight() is None


def test_terms_are_fractions():
    terms = (Fraction(1, 2) * wp * e1).terms()
    assert terms == {(1, 0, 0, 1, 0): Fraction(1, 2)}


def test_derivations_and_brackets():
    assert qjalg.derive("dz", e1) == -wp - e2
    assert qjalg.derive("ob", wp) == 20 * e4 - 2 * wp**2
    assert qjalg.bracket("tv", e4, "e6", 1).is_zero()
    rc = qjalg.bracket("rc", e4, wp, 1)
    assert rc.depth() == (0, 1)
    assert not qjalg.member("JS", rc)
    assert qjalg.member("JS", qjalg.bracket("rcd", e4, wp, 1))
    assert qjalg.transvectant_by_recurrence(wp, e1, 3) == qjalg.bracket("tv", wp, e1, 3)


def test_q_coefficient():
    form, c = qjalg.q_coefficient(e1 * e1 * e2, 1, 1)
    assert c == 2
    assert form == -2 * e1
    assert qjalg.eval("q(e2, 1, 0)") == (qjalg.Form(-1), 1)


def test_dimensions():
    assert [qjalg.dim("DS", k) for k in (0, 1, 2, 4, 6, 8, 10, 12)] == [1, 0, 1, 2, 3, 4, 5, 7]
    assert qjalg.dim("DSINF", 40) == qjalg.dim_brute("DSINF", 40)
    assert qjalg.alcuin(15) == 7
    assert qjalg.dim("DSINF", 10**6) > 0


def test_expand_and_numeric():
    s = qjalg.expand(wp, 1, 2)
    assert s == {(0, -2): 1, (0, 2): Fraction(1, 15)}
    v = qjalg.eval_numeric(1, 2j, 0.1 + 0.05j, 4, 4)
    assert abs(v - 1) < 1e-12


def test_json_round_trip():
    f = 3 * wp * e1 - Fraction(2, 7) * e2**2
    assert qjalg.Form.from_json(f.to_json()) == f


def test_errors():
    with pytest.raises(ValueError):
        qjalg.eval("wp +")
    with pytest.raises(ValueError):
        qjalg.dim("DX", 3)
    with pytest.raises(ValueError):
        qjalg.expand(wp + e4)


def test_verify_suite():
    results = qjalg.verify("identities")
    assert results and all(ok for _, ok, _ in results)

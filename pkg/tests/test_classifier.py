import pytest
from hypothesis import given, strategies as st

from toralorders.classifier import (
    NEGATIVE,
    NO_SECONDARY,
    SINGULAR,
    WITH_SECONDARY,
    ConstructionError,
    LocalisedBrauerClass,
    MalformedInput,
    certificate_text,
    classify,
    construct,
    ramification_profile,
    report_json,
)
from toralorders.fields import FieldError, field


def cls(**kw):
    return LocalisedBrauerClass.from_json(kw)


def no_sec(q=7, n=3, a=3, g=1, **kw):
    return cls(variant="regular_no_secondary", q=q, n=n, a=a, g={"prime": "v", "value": g}, **kw)


def with_sec(q=7, n=3, a=2, b=3, g=1, **kw):
    return cls(variant="regular_with_secondary", q=q, n=n, a=a, b=b, g={"prime": "v", "value": g}, **kw)


def singular(m_list, q, g=1, end="end_left", **kw):
    return cls(variant="singular_hj", q=q, m_list=m_list, g={"prime": end, "value": g}, **kw)


def test_no_secondary_n7_q8_certified():
    v = classify(no_sec(q=8, n=7, a=2))
    assert v.verdict == NO_SECONDARY and v.terminal_certified


def test_det8_not_certified():
    v = classify(singular([3, 3], q=9, n=8))
    assert v.verdict == SINGULAR and v.order == 8 and not v.terminal_certified
    assert v.details["det"] == 8


def test_all_twos_det7_certified():
    v = classify(singular([2] * 6, q=8))
    assert v.verdict == SINGULAR and v.order == 7 and v.terminal_certified


def test_declared_order_must_match_det():
    v = classify(singular([2, 2], q=7, n=6))
    assert v.verdict == NEGATIVE and "determinant" in v.reasons[0]


def test_interior_marking_is_negative():
    v = classify(singular([2, 2, 2], q=5, g=2, end="E_2"))
    assert v.verdict == NEGATIVE and "interior" in v.label()


def test_end_markings():
    assert classify(singular([2, 2, 2], q=5, g=2, end="E_1")).details["marked_end"] == "left"
    assert classify(singular([2, 2, 2], q=5, g=2, end="E_3")).details["marked_end"] == "right"
    with pytest.raises(MalformedInput):
        classify(singular([2, 2, 2], q=5, g=2, end="E_7"))


def test_alpha_not_full_order():
    v = classify(singular([2, 2], q=7, alpha=1))
    assert v.verdict == NEGATIVE and "residue extension" in v.reasons[0]


def test_a_not_full_order():
    v = classify(no_sec(q=7, n=3, a=1))
    assert v.verdict == NEGATIVE


def test_g_off_v_negative():
    c = cls(variant="regular_no_secondary", q=7, n=3, a=3, g={"prime": "u", "value": 2})
    assert classify(c).verdict == NEGATIVE


def test_missing_roots():
    with pytest.raises(FieldError, match="no primitive root of unity"):
        classify(singular([2, 2], q=5))


@pytest.mark.parametrize("obj", [
    {"variant": "nope", "q": 7},
    {"variant": "singular_hj", "q": 6, "m_list": [2]},
    {"variant": "singular_hj", "q": 7},
    {"variant": "singular_hj", "q": 7, "m_list": [1, 2]},
    {"variant": "regular_no_secondary", "q": 7, "n": 3},
    {"variant": "regular_no_secondary", "q": 7, "n": 3, "a": 0},
    {"variant": "regular_no_secondary", "q": 7, "n": 3, "a": 3, "g": {"value": 0}},
    [1, 2],
])
def test_malformed(obj):
    with pytest.raises(MalformedInput):
        LocalisedBrauerClass.from_json(obj)


def test_json_round_trip():
    c = singular([2, 2], q=7, g=2, alpha=3)
    assert LocalisedBrauerClass.from_json(c.to_json()) == c


def test_with_secondary_totally_ramified():
    v = classify(with_sec())
    assert v.verdict == WITH_SECONDARY and v.details["secondary_cancellation"]
    ram = v.details["ramification"]
    assert ram["u"]["degree"] == ram["v"]["degree"] == 3
    assert ram["u"]["exponent"] and ram["v"]["exponent"]


def test_construct_no_secondary_g3():
    p = construct(no_sec(g=3, n_lambda=2), N=4)
    assert p.formula() == "M_2(Δ_3(v))" and p.stable and p.degree == 18
    assert p.delta_d_checks["passed"]


def test_construct_with_secondary_d1():
    p = construct(with_sec(), N=4)
    assert p.d == 1 and p.formula() == "M_1(Δ)" and p.z == "y"


def test_construct_singular_22():
    p = construct(singular([2, 2], q=7, g=2), N=5)
    assert p.formula() == "M_1(Δ_2(f1))" and p.z == "f1"
    assert p.assumption.passed and p.assumption_next.passed
    assert p.delta_d_checks["passed"]


def test_construct_right_end_uses_reversed_string():
    p = construct(singular([3, 2], q=11, g=2, end="end_right"), N=4)
    assert "[2, 3]" in p.symbol and p.stable


def test_construct_negative_raises():
    with pytest.raises(ConstructionError):
        construct(no_sec(a=1))


def test_profile_22():
    prof = ramification_profile(singular([2, 2], q=7, alpha=3))
    assert [e.nu[0] for e in prof] == [0, 1, 2, 3]
    assert [e.exponent for e in prof] == [0, 1, 2, 0]
    assert prof[0].order == 1 and prof[-1].order == 1
    assert prof[1].order == 3


def test_profile_trivial_alpha():
    # α a cube: every class is trivial
    prof = ramification_profile(singular([2, 2], q=7, alpha=6 ** 3 % 7))
    assert all(e.order == 1 for e in prof)


def _prime_1_mod(m):
    p = m + 1
    while any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
        p += m
    return p


@given(st.lists(st.integers(2, 4), min_size=1, max_size=3), st.data())
def test_profile_cocycle(m_list, data):
    from toralorders.hj import IntersectionData, determinant_of_R
    m = determinant_of_R(IntersectionData(m_list))
    q = _prime_1_mod(m)
    F = field(q)
    alpha = data.draw(st.integers(1, q - 1))
    prof = ramification_profile(singular(m_list, q=q, alpha=alpha))
    vals = [F.pow(alpha, e.exponent) for e in prof]
    one = F.kummer_representative(1, m)
    for i in range(1, len(prof) - 1):
        assert (prof[i + 1].exponent + prof[i - 1].exponent - m_list[i - 1] * prof[i].exponent) % m == 0
        ratio = F.mul[F.mul[vals[i + 1]][vals[i - 1]]][F.inv[F.pow(vals[i], m_list[i - 1])]]
        assert F.kummer_representative(ratio, m) == one


def test_report_and_certificate_deterministic():
    c = singular([2, 2], q=7, g=2)
    r1, code = report_json(c, N=4, seed=3)
    r2, _ = report_json(c, N=4, seed=3)
    assert code == 0 and r1 == r2
    text = certificate_text(r1)
    assert "verdict: toral-terminal-singular" in text and "seed=3" in text


def test_report_negative_exit():
    _, code = report_json(no_sec(a=1))
    assert code == 1

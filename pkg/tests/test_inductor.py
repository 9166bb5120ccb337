"""Symbolic-in-the-index certificates for the induction step."""

from qaw.awcore import ALPHA
from qaw.families import coeff_suite
from qaw.inductor import (
    certify_base_case,
    certify_dq_step,
    certify_sq_step,
    instantiation_coherence,
)
from qaw.scalar import ONE, ZERO


def test_advance_identities_direct():
    """The step recurrences, stated straight on the coefficient suite."""
    s = coeff_suite()
    assert s.alpha_n.shift_n(1) == s.c_n1 + ALPHA * s.alpha_n
    expected_next_c = s.c_n2 + ALPHA * s.c_n + (ALPHA - ONE) * s.alpha_n * s.B_n
    assert s.c_n.shift_n(1) == expected_next_c


def test_d_reductions_direct():
    s = coeff_suite()
    assert s.d_k1 == s.c_n1.shift_n(1)
    assert s.d_k2 == s.c_n2.shift_n(1)
    assert s.d_k3 == s.c_n3.shift_n(1)
    assert s.d_k4 == s.c_n4.shift_n(1)
    assert s.d_k5 == ZERO
    assert s.d_k6 == ZERO


def test_c4_factor_chain():
    s = coeff_suite()
    residual = s.c_n4 + ALPHA * s.c_n * s.C_n.shift_n(-1) - s.c_n.shift_n(-1) * s.C_n
    assert residual == ZERO


def test_sq_step_certificates():
    certs = certify_sq_step()
    assert [c.name for c in certs] == [
        "sq-offset-m1-cancels",
        "sq-offset-m2-cancels",
        "sq-alpha-advance",
        "sq-c-advance",
    ]
    assert all(c.verdict == "zero" for c in certs)
    assert all(c.residual.is_zero for c in certs)


def test_dq_step_certificates():
    certs = certify_dq_step()
    assert len(certs) == 6
    assert all(c.verdict == "zero" for c in certs)
    by_name = {c.name: c for c in certs}
    note = by_name["dq-offset-0"].note
    assert "index-k reading cancels" in note
    assert "index-(k+1)" in note
    # every side of the six reductions is denominator-free
    for c in certs:
        assert "clear denominators" in c.note


def test_base_case_certificates():
    certs = certify_base_case()
    assert [c.name for c in certs] == [
        "base-alpha0",
        "base-c0",
        "base-c1-cancel",
        "base-sq-constant",
        "base-dq-constant",
    ]
    assert all(c.verdict == "zero" for c in certs)


def test_certificate_records():
    cert = certify_sq_step()[0]
    rec = cert.record()
    assert rec["name"] == cert.name
    assert rec["verdict"] == "zero"
    assert rec["residual_text"] == ""


def test_instantiation_coherence_defaults():
    rows = instantiation_coherence()
    assert {r["k"] for r in rows} == {2, 3, 5, 8}
    assert all(r["status"] == "pass" for r in rows)
    assert all(r["check"] == "instantiation-coherence" for r in rows)
    # ten step identities per sampled index
    assert len(rows) == 40


def test_instantiation_coherence_custom_ks():
    rows = instantiation_coherence(ks=(4,))
    assert len(rows) == 10
    assert all(r["k"] == 4 and r["status"] == "pass" for r in rows)

import pytest

from weylunip import oracle
from weylunip.classical_maps import UnipotentSymbol
from weylunip.weyl_classes import context


@pytest.mark.parametrize(
    "ctx",
    [
        context("C", 4),
        context("C", 4, "p2"),
        context("B", 3),
        context("B", 3, "p2"),
        context("D", 4),
        context("D", 4, "p2"),
        context("A", 5),
        context("G2", char="p3"),
        context("F4", char="p2"),
        context("E8", char="p2"),
    ],
)
def test_theorem_and_identity_suites_pass(ctx):
    r = oracle.verify_theorem_0_2(ctx)
    assert r.passed, r.failures[:3]
    r = oracle.verify_phi_psi_identity(ctx)
    assert r.passed, r.failures[:3]


def test_xi_suite_small():
    r = oracle.verify_xi_bijection(8)
    assert r.passed and r.counters["image-equals-target"] == 10


def test_fiber_minimum_suite_small():
    r = oracle.verify_fiber_minimum(10)
    assert r.passed
    assert r.counters["unique-minimum"] == r.counters["rules-match-minimum"]


@pytest.mark.parametrize(
    "ctx",
    [
        context("C", 3, "p2"),
        context("B", 3, "p2"),
        context("D", 4, "p2"),
        context("G2", char="p3"),
        context("E7", char="p2"),
    ],
)
def test_rho_pi_suite(ctx):
    r = oracle.verify_rho_pi(ctx)
    assert r.passed, r.failures[:3]


def test_rho_composition_spot_values():
    g2p3 = context("G2", char="p3")
    assert oracle.rho(g2p3, UnipotentSymbol.named("(~A_1)_3")).name == "~A_1"
    e7p2 = context("E7", char="p2")
    assert oracle.rho(e7p2, UnipotentSymbol.named("(A_3+A_2)_2")).name == "A_3+A_2"


@pytest.mark.parametrize("family", ["G2", "F4", "E6", "E7", "E8"])
def test_tables_suite(family):
    r = oracle.verify_tables(family)
    assert r.passed, r.failures[:3]


@pytest.mark.parametrize(
    "ctx", [context("C", 2), context("D", 4), context("B", 5), context("E8")]
)
def test_special_suite(ctx):
    r = oracle.verify_special(ctx)
    assert r.passed, r.failures[:3]


def test_reports_are_deterministic():
    a = oracle.verify_theorem_0_2(context("D", 5))
    b = oracle.verify_theorem_0_2(context("D", 5))
    assert a.record_lines() == b.record_lines()
    assert a.counters == b.counters
    assert "elapsed" not in " ".join(a.record_lines())


def test_report_records_shape():
    r = oracle.verify_xi_bijection(4)
    lines = r.record_lines()
    assert lines
    for line in lines:
        fields = dict(tok.split("=", 1) for tok in line.split(" "))
        assert fields["suite"] == "xi"
        assert fields["status"] == "pass"
        assert int(fields["checked"]) >= 0


def test_failures_carry_minimal_counterexamples():
    # force a failure by checking a doctored report manually
    r = oracle.VerificationReport("demo", "ctx")
    r.count("law")
    r.fail("law", (1, 2), "x", "y")
    assert not r.passed
    assert r.record_lines() == [
        "suite=demo context=ctx assertion=law checked=1 failures=1 status=fail"
    ]


def test_fiber_of_puts_section_first():
    ctx = context("C", 2)
    fib = oracle.fiber_of(ctx, UnipotentSymbol.plain((2, 2)))
    assert [str(C) for C in fib] == ["r=2,2;p=", "r=;p=2,2"]


def test_acceptance_contexts_cover_both_variants():
    ctxs = oracle.acceptance_contexts(4)
    names = {str(c) for c in ctxs}
    assert "C_4/p2" in names and "D_4/good" in names and "E8/p3" in names
    assert "B_2/good" in names and "D_3/good" in names

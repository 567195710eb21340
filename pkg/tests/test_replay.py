import pytest

from symcube.expressions import Atom, CharMono, PI, PI_PRIME
from symcube.registry import HypothesisMissingError, load_profile
from symcube.replay import BIG_PI, BIG_PI_P, W, replay


def test_unknown_script(reg):
    with pytest.raises(ValueError, match="lemma21"):
        replay("lemma23", reg)


def test_lemma21(reg):
    log = replay("lemma21", reg)
    assert "cuspidal" in log.conclusion and "Pi = Pi'" in log.conclusion
    assert log.registry.is_cuspidal(BIG_PI)
    assert log.registry.is_cuspidal(BIG_PI_P)
    assert log.registry.iso_related(BIG_PI, BIG_PI_P)
    assert log.discrepancy_notes() == ()
    assert any("recomputed" in f for f in log.facts)
    for s in log.steps:
        assert s.dimension_lhs == s.dimension_rhs


def test_lemma22(reg):
    log = replay("lemma22", reg)
    assert "w^3 = (w')^3" in log.conclusion
    assert "sym^4(pi) = sym^4(pi')" in log.conclusion
    assert log.discrepancy_notes() == ()
    out = log.registry
    assert out.iso_related(Atom.simple(PI, 4), Atom.simple(PI_PRIME, 4))
    assert out.rewrite_mono(CharMono.gen("w'")) == W
    justs = {s.justification for s in log.steps}
    assert justs <= {"plethysm", "registry_isomorphism", "analytic_axiom", "pairing"}


def test_theorem_a_branch_b(reg):
    log = replay("theoremA", reg)
    assert "p5 = 1" in log.conclusion
    assert any("dual(Pi@w) = Pi@w^-4" in f for f in log.facts)
    notes = log.discrepancy_notes()
    # exactly one dimension-audit failure: the cited degree-28 list
    audits = [n for n in notes if n.startswith("dimension audit")]
    assert audits == ["dimension audit eq-3.4: 36 vs 28"]
    assert any("28 against 36" in n for n in notes)
    assert any("eq-3.3(b)" in n for n in notes)
    assert any("eq-3.5" in n for n in notes)


def test_theorem_a_branch_a():
    rega = load_profile("theoremA-branch-a")
    log = replay("theoremA", rega)
    assert "branch (a)" in log.conclusion
    assert "p5 unconstrained" in log.conclusion


def test_corollary_b_requires_the_hypothesis(reg):
    assert not reg.sym5_automorphic
    with pytest.raises(HypothesisMissingError, match="sym\\^5"):
        replay("corollaryB", reg)


def test_corollary_b():
    regb = load_profile("corollaryB")
    log = replay("corollaryB", regb)
    out = log.registry
    assert out.iso_related(Atom.simple(PI, 5), BIG_PI.twisted(W))
    assert out.iso_related(Atom.simple(PI, 5), BIG_PI_P.twisted(W))
    assert "sym^6(pi) = sym^2(pi')@w^2 + pi*pi'@w^2" in log.conclusion
    assert "sym^7(pi) = pi'@w^3 + sym^2(pi)*pi'@w^2" in log.conclusion
    audits = [n for n in log.discrepancy_notes() if n.startswith("dimension audit")]
    assert audits == ["dimension audit eq-4.5: 7 vs 10"]


def test_replay_is_deterministic(reg):
    a = replay("theoremA", reg)
    b = replay("theoremA", reg)
    assert a.steps == b.steps
    assert a.conclusion == b.conclusion

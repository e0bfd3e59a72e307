import numpy as np
import pytest

from lamspace import (
    Conclusion,
    LambdaWeights,
    MissingLambda,
    SpaceTag,
    UnknownWitness,
    VacuousPremise,
    classify,
    gallery,
    inclusion_criterion_check,
    lambda_transform,
    verify_gallery,
)
from lamspace import sequences as seqs
from lamspace.spaces import WITNESS_IDS

CES = LambdaWeights.cesaro()
ALL_SPACES = ["c0", "c", "linf", "l1", "lp(2)", "cs0", "cs", "bs",
              "c0_lambda", "c_lambda", "linf_lambda", "cs0_lambda", "cs_lambda", "bs_lambda"]


def test_space_tags():
    assert SpaceTag.parse("l1") == SpaceTag("lp", p=1.0)
    assert str(SpaceTag.parse("lp(2)")) == "lp(2)"
    assert SpaceTag.parse("bs_lambda").is_lambda
    with pytest.raises(ValueError):
        SpaceTag.parse("lp(0.5)")
    with pytest.raises(ValueError):
        SpaceTag.parse("nowhere")


@pytest.mark.parametrize("space", ALL_SPACES)
def test_zero_is_everywhere(space):
    tag = SpaceTag.parse(space)
    assert classify(seqs.zero(), tag, CES if tag.is_lambda else None).holds


def test_missing_and_extra_weights():
    with pytest.raises(MissingLambda):
        classify(seqs.zero(), "cs_lambda")
    with pytest.raises(ValueError):
        classify(seqs.zero(), "cs", CES)


def test_classical_spaces():
    h = seqs.harmonic()
    assert classify(h, "c0").holds
    assert classify(h, "l1").fails
    assert classify(h, "lp(2)").holds
    assert classify(seqs.alternating(), "linf").holds
    assert classify(seqs.alternating(), "c").fails


def test_first_witness(core_lam):
    x = gallery("cs-not-cs0", core_lam).sequence
    depth = 1000 if core_lam.family == "geometric" else 4096
    assert classify(x, "cs_lambda", core_lam, depth).holds
    assert classify(x, "cs0_lambda", core_lam, depth).fails


def test_constant_sequence(core_lam):
    depth = 1000 if core_lam.family == "geometric" else 4096
    for d in (16, 64, depth):
        assert classify(seqs.constant(1.0), "bs_lambda", core_lam, d).fails
    assert classify(seqs.constant(1.0), "linf_lambda", core_lam, depth).holds


def test_gallery_is_ok_for_every_builtin(lam):
    for name in WITNESS_IDS:
        report = verify_gallery(gallery(name, lam), lam, depth=1000)
        assert report["ok"], (name, report)


def test_gallery_closed_forms():
    n = np.arange(1001)
    assert np.allclose(lambda_transform(CES, gallery("cs-not-cs0", CES).sequence).take(1001),
                       1 / (n + 2.0) ** 2, rtol=0, atol=1e-12)
    for lam in (CES, LambdaWeights.power(0.5)):
        y = lambda_transform(lam, gallery("c0lam-not-cslam", lam).sequence).take(1001)
        assert np.all(y >= 1 / (n + 1.0) - 1e-12)


def test_unknown_witness():
    with pytest.raises(UnknownWitness):
        gallery("nope", CES)


def test_inclusion_criterion():
    v = inclusion_criterion_check(seqs.zero(), CES, "cs")
    assert v.holds and v.evidence["x_verdict"]["conclusion"] == "Holds"
    x = gallery("cs-not-cs0", CES).sequence
    v = inclusion_criterion_check(x, CES, "cs")
    assert v.evidence["verdicts_agree"]
    assert v.evidence["partial_sum_identity_holds"]
    with pytest.raises(VacuousPremise):
        inclusion_criterion_check(seqs.constant(1.0), CES, "bs")


def test_verdict_carries_subject_and_depth():
    v = classify(seqs.harmonic(), "cs_lambda", CES, depth=512)
    assert v.depth == 512 and "cs_lambda" in v.subject
    assert v.conclusion is not Conclusion.HOLDS

import json
from fractions import Fraction
from importlib import resources

import jsonschema
import pytest

from hypertrans import extremal
from hypertrans.core import adjacent_pairs, transmission
from hypertrans.enumeration import enumerate_unicyclic
from hypertrans.errors import BadLemmaId, BadParam
from hypertrans.extremal import (
    check_lemma,
    expected_adjacent_pairs,
    graph_remark_check,
    lemma6_exhaustive,
    lemma6_instance,
    sigma_max_value,
    sigma_min_formula,
    verify_theorem_max,
    verify_theorem_min,
)
from hypertrans.families import cg_star, loose_cycle, tilde_c2
from hypertrans.hgr import read_hgr
from hypertrans.transforms import decompose

import oracles


def schema(name):
    return json.loads(resources.files("hypertrans").joinpath(f"schemas/{name}.schema.json").read_text())


def displayed_min(k, m):
    """The fractional closed form, plus one unless m == 3."""
    n = (k - 1) * m
    value = n * (n - 1 - Fraction(k, 2))
    assert value.denominator == 1
    return int(value) + (m != 3)


@pytest.mark.parametrize("k, m, value", [(3, 2, 7), (3, 3, 21), (3, 4, 45), (4, 2, 19), (4, 3, 54)])
def test_sigma_min_formula(k, m, value):
    assert sigma_min_formula(k, m) == displayed_min(k, m) == value


def test_sigma_min_formula_attained():
    assert sigma_min_formula(3, 3) == oracles.pair_sum(loose_cycle(3, 3))
    assert sigma_min_formula(3, 4) == oracles.pair_sum(cg_star(3, 2, [2, 0]))
    assert sigma_min_formula(4, 2) == oracles.pair_sum(loose_cycle(4, 2))
    assert oracles.pair_histogram(loose_cycle(4, 2)) == {1: 11, 2: 4}


@pytest.mark.parametrize("k", range(3, 9))
@pytest.mark.parametrize("m", range(2, 12))
def test_sigma_min_formula_integral(k, m):
    assert sigma_min_formula(k, m) == displayed_min(k, m)


def test_sigma_min_formula_rejects_graphs():
    with pytest.raises(BadParam):
        sigma_min_formula(2, 5)


@pytest.mark.parametrize("k, m, value", [(3, 2, 7), (3, 3, 24), (3, 4, 57)])
def test_sigma_max_value(k, m, value):
    assert sigma_max_value(k, m) == value
    assert oracles.pair_sum(tilde_c2(k, (m - 2) // 2, (m - 1) // 2)) == value


def test_verify_examples():
    r = verify_theorem_min(3, 3)
    assert r.passed and r.unique and r.enumerated_value == 21
    r = verify_theorem_max(3, 4)
    assert r.passed and r.unique and r.enumerated_value == 57
    lo, hi = verify_theorem_min(3, 2), verify_theorem_max(3, 2)
    assert lo.passed and hi.passed and lo.extremal_keys == hi.extremal_keys
    jsonschema.validate(r.to_dict(), schema("extremal_report"))


def test_verify_rejects():
    with pytest.raises(BadParam):
        extremal.verify_theorem(2, 5, "min")
    with pytest.raises(BadParam):
        extremal.verify_theorem(3, 3, "sideways")


def test_verify_failure_dumps_witness(tmp_path, monkeypatch):
    monkeypatch.setattr(extremal, "sigma_min_formula", lambda k, m: -1)
    r = extremal.verify_theorem(3, 4, "min", witness_dir=tmp_path)
    assert not r.passed
    assert read_hgr(r.witness).m == 4


@pytest.mark.parametrize("k, m", [(3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (2, 5), (2, 6)])
def test_adjacent_pair_counts(k, m):
    for e in enumerate_unicyclic(k, m).entries:
        g = decompose(e.graph).girth
        assert adjacent_pairs(e.graph) == expected_adjacent_pairs(k, m, g)


def test_graph_remark():
    r = graph_remark_check(5)
    assert r.passed and r.enumerated_value == 15 == r.formula_value
    assert len(r.extremal_keys) == 2
    assert "minimizers: cycle-5, triangle-star" in r.notes
    assert "maximizers: lollipop (sigma=17)" in r.notes
    r6 = graph_remark_check(6)
    assert r6.passed and r6.unique and r6.enumerated_value == 24
    with pytest.raises(BadParam):
        graph_remark_check(4)


def test_lemma6_instance_example():
    instance, before, after, _, ok, _ = lemma6_instance(3, 1, 3)
    assert ok
    assert after - before == 2
    assert transmission(tilde_c2(3, 2, 2)) - transmission(tilde_c2(3, 1, 3)) == 2


def test_lemma6_exhaustive():
    r = lemma6_exhaustive()
    assert r.passed and r.trials == 48
    jsonschema.validate(r.to_dict(), schema("lemma_report"))


@pytest.mark.parametrize("lemma", extremal.LEMMA_IDS)
def test_check_lemma(lemma):
    r = check_lemma(lemma, 30, 7)
    assert r.passed and r.satisfied == 30
    jsonschema.validate(r.to_dict(), schema("lemma_report"))


def test_lemma_trials_respect_hypotheses():
    for rec in check_lemma(1, 40, 3).records:
        assert rec.instance["p"] >= rec.instance["q"] >= 1
    for rec in check_lemma(5, 40, 3).records:
        assert rec.instance["far"] >= rec.instance["near"] and rec.instance["moved"] >= 1


def test_check_lemma_replayable_and_parallel():
    a = check_lemma(4, 20, 42).to_dict()
    b = check_lemma(4, 20, 42, jobs=2).to_dict()
    assert a == b
    assert check_lemma(4, 20, 43).to_dict() != a


def test_check_lemma_rejects():
    with pytest.raises(BadLemmaId):
        check_lemma(7, 1, 0)
    with pytest.raises(BadParam):
        check_lemma(1, 0, 0)


def test_lemma_failure_dumps_witness(tmp_path, monkeypatch):
    monkeypatch.setattr(extremal, "lemma6_boundary_formula", lambda k, p, q: 0)
    r = check_lemma(6, 3, 42, witness_dir=tmp_path)
    assert not r.passed and len(r.witnesses) == 3
    assert read_hgr(r.witnesses[0]).k in (3, 4, 5)

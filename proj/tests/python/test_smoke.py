"""Smoke tests for the swrbd python module."""

import json
from fractions import Fraction

import pytest

import swrbd


def test_preset_catalog():
    assert swrbd.list_presets() == ["park-p", "park-q"]
    cfg = swrbd.load_preset("park-p")
    assert cfg.label == "park-p"
    assert cfg.rank == 14
    assert cfg.chain_length == 6
    assert cfg.sphere_count == 8
    with pytest.raises(ValueError):
        swrbd.load_preset("park-x")


def test_lattice_helpers():
    cfg = swrbd.load_preset("park-p")
    k = [-2, -2] + [1] * 12
    assert swrbd.square(cfg, k) == -4
    assert swrbd.is_characteristic(cfg, k)
    assert not swrbd.is_characteristic(cfg, [0] * 14)
    assert swrbd.derived_bound(cfg) == -4
    assert swrbd.pairing(cfg, k, [1, 1] + [0] * 12) == -4
    assert swrbd.blown_down_square(cfg, k) == Fraction(2)
    assert swrbd.formal_dimension(cfg, k) == 0
    for tup in cfg.extension_tuples:
        assert swrbd.k0_square(cfg, tup) == Fraction(-6)


def test_park_q_pipeline():
    cfg = swrbd.load_preset("park-q")
    rep = swrbd.run_pipeline(cfg, threads=2)
    assert rep.stage_counts == (437400, 17496, 3754, 2)
    k = [-2, -2] + [1] * 11
    neg_k = [2, 2] + [-1] * 11
    assert rep.basic_classes == [k, neg_k]
    assert swrbd.verify_lemma_hypothesis(cfg, rep)
    assert swrbd.check_minimality(cfg, rep)

    cert = json.loads(swrbd.certificate_json(cfg, rep))
    assert cert["stage_counts"] == [437400, 17496, 3754, 2]
    assert cert["minimal"] is True
    assert cert["blown_down_squares"] == [1, 1]
    assert cert["config_digest"] == swrbd.config_digest(cfg)


def test_config_roundtrip():
    cfg = swrbd.load_preset("park-p")
    text = swrbd.serialize_config(cfg)
    back = swrbd.parse_config(text)
    assert back == cfg
    assert swrbd.serialize_config(back) == text


def test_invariant_checks():
    cfg = swrbd.load_preset("park-q")
    checks = swrbd.invariant_checks(cfg)
    assert checks and all(passed for _, passed in checks)


def test_tampered_config_rejected():
    doc = json.loads(swrbd.serialize_config(swrbd.load_preset("park-p")))
    doc["H"][2] = -66
    with pytest.raises(ValueError, match="not orthogonal"):
        swrbd.parse_config(json.dumps(doc))

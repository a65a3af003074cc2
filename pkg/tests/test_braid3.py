from __future__ import annotations

from itertools import product

import pytest

from turaev import DiagramError, braid_closure, concordance_interval, knot_signature, parse_braid, signature
from turaev.braid3 import (
    MurasugiNormalForm,
    TorusParams,
    Type1,
    Type2,
    Type3,
    classify,
    erle_signature,
    greene_s,
    normal_form_word,
    parse_normal_form,
    torus_invariants,
    torus_params,
    turaev_genus_statement,
)
from turaev.report import braid3_report


def nf(n, *pairs):
    return MurasugiNormalForm(n, Type1(pairs))


def test_classify():
    assert classify(MurasugiNormalForm(0, Type2(4))) == "link"
    assert classify(MurasugiNormalForm(1, Type2(-1))) == "link"
    assert classify(MurasugiNormalForm(1, Type3(-2))) == "link"
    assert classify(MurasugiNormalForm(1, Type3(-1))) == "knot"
    assert classify(nf(1, (1, 1))) == "knot"
    assert classify(nf(0, (2, 1))) == "link"


def test_variant_validation():
    with pytest.raises(DiagramError):
        Type1(())
    with pytest.raises(DiagramError):
        Type1(((1, 0),))
    with pytest.raises(DiagramError):
        Type3(-4)
    with pytest.raises(DiagramError):
        TorusParams(6)


def test_words():
    assert str(normal_form_word(nf(0, (3, 1)))) == "s1 s1 s1 s2^-1"
    assert str(normal_form_word(nf(1, (1, 1)))) == "s1 s2 s1 s2 s1 s2 s1 s2^-1"
    assert normal_form_word(MurasugiNormalForm(1, Type3(-1))).letters == (1, 2) * 3 + (-1, -2)
    assert normal_form_word(nf(-1, (1, 1))).letters == (-2, -1) * 3 + (1, -2)


def test_erle_examples():
    assert erle_signature(nf(0, (3, 1))) == -2
    assert erle_signature(nf(1, (1, 1))) == -4
    assert erle_signature(nf(0, (1, 1))) == 0
    with pytest.raises(DiagramError):
        erle_signature(MurasugiNormalForm(1, Type3(-1)))
    with pytest.raises(DiagramError, match="link"):
        erle_signature(nf(0, (2, 1)))


def test_greene_examples():
    assert greene_s(nf(0, (3, 1))) == (2, 2)
    assert greene_s(nf(1, (1, 1))) == (4, 4)
    assert greene_s(nf(-1, (1, 1))) == (-4, -4)


@pytest.mark.parametrize(
    "k, two_tau, sigma",
    [(2, 2, -2), (4, 6, -6), (5, 8, -8), (7, 12, -8), (8, 14, -10), (-5, -8, 8)],
)
def test_torus_invariants(k, two_tau, sigma):
    inv = torus_invariants(TorusParams(k))
    assert (inv.two_tau, inv.s, inv.sigma) == (two_tau, two_tau, sigma)


@pytest.mark.parametrize("k", [2, 4, 5, 7, 8, -4, -7])
def test_torus_signature_matches_pipeline(k):
    word = TorusParams(k).word()
    assert knot_signature(braid_closure(word)) == torus_invariants(TorusParams(k)).sigma


@pytest.mark.parametrize("n, m", [(1, -1), (1, -3), (2, -1), (2, -3), (0, -1), (0, -3), (-1, -1)])
def test_type3_is_torus_knot(n, m):
    form = MurasugiNormalForm(n, Type3(m))
    p = torus_params(form)
    got = signature(braid_closure(normal_form_word(form)))[0]
    assert got == torus_invariants(p).sigma


def test_genus_statements():
    assert turaev_genus_statement(TorusParams(7)) == {2}
    assert turaev_genus_statement(TorusParams(5)) == {1}
    assert turaev_genus_statement(nf(3, (1, 1))) == {2, 3}
    assert turaev_genus_statement(MurasugiNormalForm(0, Type2(3))) is None


def test_parse_normal_form():
    assert parse_normal_form("n=1; type=1; pairs=(1,1),(2,3)") == nf(1, (1, 1), (2, 3))
    assert parse_normal_form("type=3; m=-1") == MurasugiNormalForm(0, Type3(-1))
    assert parse_normal_form("n=0; type=2; k=4") == MurasugiNormalForm(0, Type2(4))
    for bad in ("n=1", "n=1; type=1", "n=x; type=1; pairs=(1,1)", "type=4", "type=1; pairs=(1,0)", "junk"):
        with pytest.raises(DiagramError):
            parse_normal_form(bad)


def test_report_verifies():
    out = braid3_report(nf(0, (3, 1)), verify=True)
    assert out["sigma"] == out["diagram_sigma"] == -2
    assert out["verified"] is True
    with pytest.raises(DiagramError, match="link"):
        braid3_report(MurasugiNormalForm(0, Type2(4)))


def test_10_124_word_is_torus_3_5():
    # the 10_124 diagram shares the signature and interval of T(3,5)
    from turaev import concordance_interval

    d = braid_closure(parse_braid("s1^5 s2 s1^3 s2", 3))
    assert knot_signature(d) == torus_invariants(TorusParams(5)).sigma
    assert 8 in concordance_interval(d)


def test_negative_n_matches_pipeline():
    checked = 0
    for n in (-2, -1):
        for k in (1, 2):
            for flat in product(range(1, 4), repeat=2 * k):
                form = nf(n, *zip(flat[::2], flat[1::2]))
                if classify(form) != "knot":
                    continue
                d = braid_closure(normal_form_word(form))
                assert erle_signature(form) == signature(d)[0]
                s, two_tau = greene_s(form)
                interval = concordance_interval(d)
                assert s in interval and two_tau in interval
                checked += 1
    assert checked > 50

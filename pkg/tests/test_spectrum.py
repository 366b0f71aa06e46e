import pytest

from mvspectra.filters import format_filter, rad, zero_set
from mvspectra.spectrum import (SpectrumPoset, is_root_system, order_iso,
                                spectrum, stem, to_dot)
from mvspectra.verify import CATALOG


def test_pspec_lex2(alg):
    p = spectrum(alg("lex:2"))
    assert p.names == ("m{1}", "m{2}", "rad")
    assert p.leq[0][2] and p.leq[1][2]
    assert not p.leq[0][1] and not p.leq[1][0]


def test_pspec_chain3_single_node(alg):
    assert spectrum(alg("chain:3")).names == ("one",)


def test_pspec_at_m1(alg):
    L = alg("lex:2")
    p = spectrum(L, at=zero_set(L, {1}))
    assert p.names == ("m{1}", "rad") and p.leq[0][1]


def test_pspec_at_requires_prime(alg):
    L = alg("lex:3")
    with pytest.raises(ValueError):
        spectrum(L, at=zero_set(L, {1, 2}))
    with pytest.raises(ValueError):
        spectrum(L, kind="maximal")


def test_minimal_spectrum(alg):
    L = alg("lex:2")
    assert spectrum(L, "minimal").names == ("m{1}", "m{2}")
    assert spectrum(L, "minimal", at=rad(L)).names == ("m{1}", "m{2}")


def test_stems(alg):
    assert [n for n, _ in stem(alg("lex:2"))] == ["rad"]
    assert stem(alg("product[chain:1,chain:1]")) == []
    assert [n for n, _ in stem(alg("chang"))] == ["one", "rad"]


@pytest.mark.parametrize("text", CATALOG)
def test_catalog_spectra_are_root_systems(alg, text):
    p = spectrum(alg(text))
    assert p.is_partial_order()
    assert is_root_system(p)


def test_hand_built_non_root_system():
    # a below b and c, which are incomparable; d on top of nothing
    leq = [[1, 1, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    p = SpectrumPoset.from_relation("abcd", [[bool(v) for v in r] for r in leq])
    assert p.is_partial_order()
    assert not is_root_system(p)


def test_order_iso_examples(alg):
    chain2 = SpectrumPoset.from_relation("xy", [[True, True], [False, True]])
    anti2 = SpectrumPoset.from_relation("xy", [[True, False], [False, True]])
    assert order_iso(chain2, spectrum(alg("chang"))) == {"x": "one", "y": "rad"}
    assert order_iso(anti2, chain2) is None
    p = spectrum(alg("lex:2"))
    assert order_iso(p, p) == {n: n for n in p.names}


def test_dot_lex2(alg):
    dot = to_dot(spectrum(alg("lex:2")))
    assert dot.count("[label=") == 3
    assert dot.count("->") == 2
    assert 'n0 [label="m{1}"];' in dot and "n0 -> n2;" in dot and "n1 -> n2;" in dot
    assert dot == to_dot(spectrum(alg("lex:2")))


def test_dot_small_cases(alg):
    single = to_dot(spectrum(alg("chain:2")))
    assert single.count("[label=") == 1 and "->" not in single
    chang = to_dot(spectrum(alg("chang")))
    assert chang.count("[label=") == 2 and chang.count("->") == 1


@pytest.mark.parametrize("text", [t for t in CATALOG if "lex" not in t and "chang" not in t])
def test_finite_spectra_are_antichains(alg, text):
    p = spectrum(alg(text))
    assert all(not p.lt(i, j) for i in range(len(p)) for j in range(len(p)))


def test_node_names_use_descriptors(alg):
    A = alg("product[chang,lex:2]")
    assert spectrum(A).names[0] == "pull{1;one}"
    assert [format_filter(F) for F in spectrum(A).filters] == list(spectrum(A).names)

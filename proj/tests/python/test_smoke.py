import pytest

pl = pytest.importorskip("polyak_lab")


def test_version():
    assert pl.version()


def test_enumerate_line_two_chords():
    assert len(pl.enumerate("line", "chord-unsigned", 2)) == 3


def test_key_ignores_circle_rotation():
    assert pl.diagram_key("U1+,O1+") == pl.diagram_key("O1+,U1+")
    assert pl.diagram_key("L:U1+,O1+") != pl.diagram_key("L:O1+,U1+")


def test_parse_error_is_reported():
    with pytest.raises(pl.PolyakError, match="parse"):
        pl.normalize_gauss_code("O1+,U1?")


def test_invariant_space_and_evaluate():
    basis = pl.invariant_space(2, "line")
    assert len(basis) == 3
    constant = [f for f in basis if len(f["entries"]) == 1]
    assert constant
    assert pl.evaluate(constant[0], "L:O1+,U2+,O2+,U1+") == "1"


def test_verify_theorem1_small():
    cert = pl.verify("theorem1", 2, "line")
    assert cert["status"] == "PASS"
    assert cert["dims"]["virt"] == 1

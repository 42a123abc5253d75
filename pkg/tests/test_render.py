import xml.etree.ElementTree as ET

import pytest

from fourpow.bijections import HeightLabeledPath, MarkedBridge, MarkedPeakPath, TwoColoredBridge
from fourpow.errors import FourPowError
from fourpow.render import render_svg

NS = {"svg": "http://www.w3.org/2000/svg"}


def parse(obj):
    return ET.fromstring(render_svg(obj))


def circles(root):
    return [(float(c.get("cx")), float(c.get("cy"))) for c in root.iterfind(".//svg:circle", NS)]


def square_centers(root):
    return [
        (float(r.get("x")) + float(r.get("width")) / 2, float(r.get("y")) + float(r.get("height")) / 2)
        for r in root.iterfind(".//svg:rect", NS)
    ]


def test_marked_peak_has_one_circle_at_apex():
    root = parse(MarkedPeakPath("UUDD", 1))
    assert circles(root) == [(2, 2)]
    assert square_centers(root) == []
    assert len(root.findall(".//svg:polyline", NS)) == 1


def test_empty_path_draws_axes_only():
    root = parse("")
    assert root.findall(".//svg:polyline", NS) == []
    assert circles(root) == []
    assert root.find(".//svg:path[@class='axes']", NS) is not None


def test_marked_bridge_example():
    root = parse(MarkedBridge("UDDU", 0))
    assert circles(root) == [(1, 1)]
    assert square_centers(root) == [(2, 0)]


def test_two_colored_uses_two_polylines():
    root = parse(TwoColoredBridge("UDDU", "DU"))
    lines = root.findall(".//svg:polyline", NS)
    assert len(lines) == 2
    assert lines[0].get("stroke") != lines[1].get("stroke")
    assert lines[1].get("points").startswith("4,0 ")
    assert square_centers(root) == [(2, 0)]


def test_height_labeled_and_determinism():
    x = HeightLabeledPath("UDUUDD", 3, 2)
    assert render_svg(x) == render_svg(x)
    assert circles(parse(x)) == [(4, 2)]


def test_non_path_objects_are_rejected():
    with pytest.raises(FourPowError):
        render_svg((1, 2))

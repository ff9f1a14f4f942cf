import xml.etree.ElementTree as ET

from legplat.cobordism import build_filling
from legplat.plat import build_front, parse_tuple
from legplat.render import render_front, render_transcript

NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg)


def count(root, cls):
    return [e for e in root.iter() if e.get("class") == cls]


def test_trefoil_front():
    root = parse(render_front(build_front(parse_tuple("[3]")).slots, "[3]"))
    assert len(count(root, "cusp")) == 4
    xs = count(root, "crossing")
    assert [x.get("data-slot") for x in xs] == ["2", "2", "2"]


def test_showcase_combinatorics():
    t = parse_tuple("[3,(6,2),2,(2,0),4]")
    root = parse(render_front(build_front(t).slots, str(t)))
    slots = "".join(x.get("data-slot") for x in count(root, "crossing"))
    assert slots == "222" + "111111" + "33" + "22" + "11" + "2222"
    assert len(count(root, "cusp")) == 4


def test_uniform_spacing():
    root = parse(render_front((2, 1, 3, 2), None))
    starts = [float(x.find(f"{NS}line").get("x1")) for x in count(root, "crossing")]
    gaps = {round(b - a, 6) for a, b in zip(starts, starts[1:])}
    assert len(gaps) == 1


def test_transcript_frames():
    root = parse(render_transcript(build_filling(parse_tuple("[3]"))))
    frames = count(root, "frame")
    assert len(frames) == 6
    assert not list(frames[0].iter(f"{NS}path"))
    last = frames[-1]
    assert len([e for e in last.iter() if e.get("class") == "crossing"]) == 3

# -*- coding: utf-8 -*-

from fractions import Fraction

from online_thue_kit.utils import iter_records
from online_thue_kit.graph.io import read_graph
from online_thue_kit.universal.horizon import Target
from online_thue_kit.universal.dump import sidecar_path, dump


def test_sidecar_path(tmp_path):
    assert sidecar_path(tmp_path / "o2.jsonl") == tmp_path / "o2.jsonl.ids"


def test_dump_o(tmp_path):
    path, ids_path = dump(Target.o(), 2, tmp_path / "o2.jsonl")
    assert ids_path.name == "o2.jsonl.ids"

    doc = read_graph(path)
    assert doc.vertices == (1, 2, 3, 4, 5)
    assert len(doc.edges) == 5
    assert doc.heights[4] == Fraction(1, 2)

    records = list(iter_records(ids_path.read_text()))
    assert len(records) == 5
    assert records[0] == {"id": 1, "form": "0/2^0", "stage": 1}
    assert records[-1] == {"id": 5, "form": "2/2^0", "stage": 2}


def test_dump_u(tmp_path):
    path, ids_path = dump(Target.u(1), 3, tmp_path / "u1.jsonl")
    doc = read_graph(path)
    assert len(doc.vertices) == 8
    assert len(doc.edges) == 7
    assert doc.heights is None
    forms = [r["form"] for r in iter_records(ids_path.read_text())]
    assert forms[:2] == ["b0", "b1"]
    assert len(set(forms)) == 8


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.universal.dump",
        preview=False,
    )

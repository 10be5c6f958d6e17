from __future__ import annotations

import io
import itertools
import json
import random
import subprocess
import sys
from pathlib import Path

import pytest

from ugqsym.cli import run
from ugqsym.enumeration import generate_by_nodes
from ugqsym.errors import ParseError
from ugqsym.graph import EMPTY, LabeledGraph, canonical, named
from ugqsym.graph6 import decode_graph6, encode_graph6, parse_graph6

DATA = Path(__file__).parent / "data"
HOST = "1-2,1-3,2-3,1-4,2-4,1-5,3-5"


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


# -- graph6 ---------------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected, n",
    [("A_", "K2", 2), ("Bw", "K3", 3), ("B?", "empty", 3), ("@", "empty", 1), ("?", "empty", 0)],
)
def test_decode_examples(text, expected, n):
    assert decode_graph6(text) == named(expected)
    assert parse_graph6(text)[0] == n


def test_encode_known_strings():
    assert encode_graph6(named("K2")) == "A_"
    assert encode_graph6(named("K3")) == "Bw"
    assert encode_graph6(EMPTY, 3) == "B?"
    # path 0-1-2-3-4 in the usual reference listing
    assert encode_graph6(LabeledGraph([(1, 2), (2, 3), (3, 4), (4, 5)]), 5) == "DhC"


def own_decode(s):
    """Bit-by-bit decoder written straight from the format description."""
    n = ord(s[0]) - 63
    bits = "".join(format(ord(c) - 63, "06b") for c in s[1:])
    pairs = [(i, j) for j in range(n) for i in range(j)]
    return n, {(i + 1, j + 1) for (i, j), b in zip(pairs, bits) if b == "1"}


def test_round_trip_exhaustive_small():
    for n in range(0, 6):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            g = LabeledGraph(p for k, p in enumerate(pairs) if mask >> k & 1)
            s = encode_graph6(g, n)
            m, h = parse_graph6(s)
            assert (m, h) == (n, g)
            assert own_decode(s) == (n, set(g.edges))
            assert encode_graph6(h, m) == s


def test_round_trip_sampled():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(6, 8)
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        g = LabeledGraph(p for p in pairs if rng.random() < 0.5)
        s = encode_graph6(g, n)
        assert parse_graph6(s) == (n, g)


def test_large_header():
    g = LabeledGraph([(1, 70)])
    s = encode_graph6(g, 70)
    assert s.startswith("~?@E")
    assert parse_graph6(s) == (70, g)


@pytest.mark.parametrize("text, offset", [("B!", 1), ("Bww", 2), ("C", 1), ("", 0)])
def test_decode_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


# -- commands -------------------------------------------------------------


def test_canon_from_stdin():
    assert call("canon", stdin="2 5\n5 7\n") == (0, "1 2\n1 3\n", "")


def test_canon_graph6_and_json():
    code, out, _ = call("canon", "Bw", "--graph6")
    assert out == "Bw\n"
    code, out, _ = call("canon", "1-3,3-2", "--json")
    assert json.loads(out) == {"edges": [[1, 2], [1, 3]], "nodes": 3, "graph6": "Bo"}


def test_eval_host():
    assert call("eval", "--pattern", "Bw", "--host", HOST)[1] == "3\n"
    assert call("eval", "--pattern", "K2", "--host", HOST, "--oracle")[1] == "7\n"


def test_matrix_golden():
    code, out, _ = call("matrix", "--max", "23")
    assert code == 0
    assert out == (DATA / "matrix23.txt").read_text()


def test_algebra_commands():
    assert call("product", "K2", "K2")[1] == "M[K2] + 2 M[P3] + 2 M[2K2]\n"
    assert call("coproduct", "2K2")[1] == "1 ⊗ M[2K2] + M[K2] ⊗ M[K2] + M[2K2] ⊗ 1\n"
    assert call("antipode", "2K2")[1] == "M[K2] + 2 M[P3] + M[2K2]\n"
    assert call("binom", "2")[1] == "M[P3] + M[2K2]\n"
    data = json.loads(call("product", "K3", "K3", "--json")[1])
    assert {d["coeff"] for d in data} == {"1", "2"}


def test_iso_and_vector():
    assert call("iso", "K3", "P3")[1] == "false\n"
    assert call("iso", "1-2,2-3", "1-3,1-2")[1] == "true\n"
    code, out, _ = call("vector", "K3", "P3", "--n", "4")
    assert out.splitlines()[1] == "1-2 1-3 2-3,3,3,1,0,0"


def test_deck_and_kelly():
    code, out, _ = call("deck", "P3")
    assert sorted(out.split()) == ["A?", "A_", "A_"]
    code, out, _ = call("kelly", "--pattern", "P3", "--host", "C5", "--json")
    rec = json.loads(out)
    assert rec["holds"] and not rec["printed_holds"]
    assert (rec["lhs"], rec["rhs"]) == (10, 10)


def test_series_and_generate():
    assert call("series", "--pattern", "K2", "--labels", "3")[1] == "x[1,2]\nx[1,3]\nx[2,3]\n"
    assert call("generate", "--nodes", "3")[1].split() == ["B?", "B_", "Bo", "Bw"]
    assert call("generate", "--edges", "4", "--count")[1] == "11\n"
    assert call("generate", "--edges", "4", "--connected", "--count", "--json")[1] == "5\n"


def test_multi_graph_file(tmp_path):
    f = tmp_path / "hosts.g6"
    f.write_text("Bw\nBo\n")
    code, out, _ = call("vector", str(f))
    assert code == 0
    assert len(out.splitlines()) == 3


def test_exit_codes():
    assert call("bogus")[0] == 2
    assert call("canon", "B!")[0] == 2
    assert call("canon", stdin="3 1\n")[0] == 2
    assert call("deck", "K2")[0] == 1
    assert call("generate", "--edges", "9", "--count")[0] == 1
    assert call("generate", "--edges", "9", "--count", "--max-edges", "9", "--max-nodes", "18") == (0, "1476\n", "")


def test_env_limits(monkeypatch):
    monkeypatch.setenv("UGQSYM_MAX_GEN_NODES", "3")
    assert call("generate", "--nodes", "4")[0] == 1
    monkeypatch.setenv("UGQSYM_MAX_EDGES", "2")
    # command-line value wins over the environment
    assert call("binom", "3", "--max-edges", "3")[0] == 0


def test_output_deterministic():
    assert call("antipode", "3K2") == call("antipode", "3K2")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ugqsym", "canon"],
        input="2 5\n5 7\n",
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 2\n1 3\n"

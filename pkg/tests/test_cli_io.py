import subprocess
import sys

import pytest
from _support import DATA, TWO_PAIRS, complete, cycle

from planarcanon.cli import main
from planarcanon.errors import GraphFormatError, TooLargeError
from planarcanon.fileio import format_edge_list, parse_edge_list, read_graph, write_graph
from planarcanon.generate import random_planar, random_relabeling
from planarcanon.graph_model import Graph
from planarcanon.oracle import brute_force_aut_count, brute_force_iso, is_witness
from planarcanon.selftest import connected_planar_graphs, run_selftest

TWO_PAIRS_FILE = str(DATA / "two_pairs.txt")
G_FILE, H_FILE = str(DATA / "twin_G.txt"), str(DATA / "twin_H.txt")


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# ---------------------------------------------------------------- file format


def test_edge_list_round_trip(tmp_path):
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)], {3: 2})
    path = tmp_path / "g.txt"
    write_graph(g, path)
    assert read_graph(path) == g
    assert parse_edge_list(format_edge_list(TWO_PAIRS)) == TWO_PAIRS


def test_comments_and_blank_lines_ignored():
    g = parse_edge_list("# triangle\n3 3\n\n0 1\n1 2\n# x\n2 0\n")
    assert g == cycle(3)


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 1\n0 1\n1 2\n", "2 1\n0 5\n", "2 1\n0 x\n", "2 1\n0 1 2\n", "2 0\nc 4 1\n", "2 0\nc 0 -1\n"],
)
def test_malformed_files(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_missing_file():
    with pytest.raises(GraphFormatError):
        read_graph("/nonexistent/graph.txt")


# -------------------------------------------------------------------- oracle


def test_oracle_automorphism_counts():
    assert brute_force_aut_count(complete(4)) == 24
    one_marked = Graph.from_edges(4, complete(4).edges, {0: 1})
    assert brute_force_aut_count(one_marked) == 6
    assert brute_force_aut_count(cycle(6)) == 12


def test_oracle_iso_and_witness():
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not brute_force_iso(cycle(6), two_triangles)
    h = cycle(5).relabel([2, 4, 1, 0, 3])
    r = brute_force_iso(cycle(5), h)
    assert r and is_witness(cycle(5), h, r.witness)
    colored = Graph.from_edges(5, cycle(5).edges, {0: 1})
    assert not brute_force_iso(colored, cycle(5))
    assert brute_force_iso(colored, cycle(5), colored=False)


def test_oracle_size_bound():
    with pytest.raises(TooLargeError):
        brute_force_iso(cycle(11), cycle(11))
    assert brute_force_iso(cycle(11), cycle(11), bound=11)


# ----------------------------------------------------------------- generator


def test_generator_is_seed_stable():
    assert random_planar(15, 7, "tree-ish") == random_planar(15, 7, "tree-ish")
    assert random_planar(15, 7, "tree-ish") != random_planar(15, 8, "tree-ish")
    assert random_planar(1, 0).n == 1 and random_planar(2, 0).m == 1
    with pytest.raises(ValueError):
        random_planar(5, 0, "dense")


@pytest.mark.parametrize("profile, check", [("biconnected", "is_biconnected"), ("3-connected", "connectivity3")])
def test_generator_profiles(profile, check):
    import networkx as nx

    for seed in range(5):
        g = random_planar(10, seed, profile).to_networkx()
        assert nx.check_planarity(g)[0]
        if check == "is_biconnected":
            assert nx.is_biconnected(g)
        else:
            assert nx.node_connectivity(g) >= 3


def test_random_relabeling_is_permutation():
    import random

    assert sorted(random_relabeling(9, random.Random(1))) == list(range(9))


# ------------------------------------------------------------------ selftest


def test_atlas_counts_small():
    counts = [sum(1 for g in connected_planar_graphs(5) if g.n == n) for n in range(1, 6)]
    # 21 connected graphs on five vertices, minus K5.
    assert counts == [1, 1, 2, 6, 20]


def test_selftest_small():
    report = run_selftest(5)
    assert report.ok and not report.mismatches
    assert report.classes_by_n[5] == 20


# ----------------------------------------------------------------------- CLI


def test_cli_canon_prints_canon(capsys, tmp_path):
    assert main(["canon", TWO_PAIRS_FILE]) == 0
    out = capsys.readouterr().out
    assert out.startswith("planar-canon v1 n=6 m=9\n")
    shuffled = _write(tmp_path, "s.txt", format_edge_list(TWO_PAIRS.relabel([5, 3, 1, 0, 2, 4])))
    main(["canon", shuffled])
    assert capsys.readouterr().out == out


def test_cli_iso_exit_codes(capsys):
    assert main(["iso", G_FILE, H_FILE]) == 1
    assert capsys.readouterr().out == "NOT-ISOMORPHIC\n"
    assert main(["iso", G_FILE, G_FILE]) == 0
    assert capsys.readouterr().out == "ISOMORPHIC\n"
    assert main(["iso", "--quiet", G_FILE, G_FILE]) == 0
    assert capsys.readouterr().out == ""


def test_cli_parse_and_planarity_errors(capsys, tmp_path):
    assert main(["canon", _write(tmp_path, "bad.txt", "3 2\n0 1\n")]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["canon", _write(tmp_path, "k5.txt", format_edge_list(complete(5)))]) == 3
    assert "error:" in capsys.readouterr().err


def test_cli_decompose_text_and_dot(capsys):
    assert main(["decompose", TWO_PAIRS_FILE]) == 0
    out = capsys.readouterr().out
    assert "pair P0 0-1" in out and "pair P1 2-3" in out
    assert "component G1 triconnected vertices=0,1,2,3" in out
    assert "center G1" in out
    assert main(["decompose", "--dot", TWO_PAIRS_FILE]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("graph decomposition {") and dot.rstrip().endswith("}")


def test_cli_trace_logs_counters(capsys):
    assert main(["canon", "--trace", G_FILE]) == 0
    err = capsys.readouterr().err
    assert "root=0-1 counters=(0,0);(2,0) ref=0>1" in err


def test_cli_selftest_and_gen(capsys):
    assert main(["selftest", "--n", "4"]) == 0
    assert capsys.readouterr().out.strip().endswith("PASS")
    assert main(["gen", "--n", "7", "--seed", "3", "--profile", "3-connected"]) == 0
    text = capsys.readouterr().out
    assert parse_edge_list(text) == random_planar(7, 3, "3-connected")


def test_cli_roots_flag(capsys):
    assert main(["canon", "--roots", "limited", TWO_PAIRS_FILE]) == 0
    limited = capsys.readouterr().out
    main(["canon", TWO_PAIRS_FILE])
    assert capsys.readouterr().out == limited


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "planarcanon", "iso", G_FILE, H_FILE], capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == "NOT-ISOMORPHIC\n"

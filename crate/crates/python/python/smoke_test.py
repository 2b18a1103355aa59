"""Quick end-to-end check of the Python bindings.

Build and install first, e.g. `maturin develop` from crates/python, then run
`python python/smoke_test.py`.
"""

from fractions import Fraction
from pathlib import Path

import fuzzy_wiener_py as fw

DATA = Path(__file__).resolve().parents[3] / "data"


def main():
    tree = fw.FuzzyGraph.from_fzg((DATA / "tree5.fzg").read_text())
    assert tree.vertex_count == 5 and tree.edge_count == 5
    assert tree.wiener_index() == Fraction("7.4")
    assert tree.kind()["fuzzy_tree"]

    f = tree.mst()
    assert f.edge_count == 4
    assert f.wiener_index() == Fraction("7.4")
    assert f.connectivity_index() == Fraction("3.5")
    assert tree.distance("a", "b") == Fraction("1.2")
    assert tree.strength("a", "e") == Fraction("0.6")

    classes = {(u, v): c for u, v, _, c, _ in tree.classify_edges()}
    assert classes[("a", "b")] == "delta"

    # floats are read through repr, so 0.3 is exactly 3/10
    g = fw.FuzzyGraph([("x", 1), ("y", 1.0), ("z", "1")], [("x", "y", 0.3), ("y", "z", "0.3")])
    assert g.distance("x", "z") == Fraction(3, 5)
    assert fw.FuzzyGraph.from_fzg(g.to_fzg()) == g

    verdict = fw.check_corollary_star(tree)
    assert verdict["holds"] is False
    assert verdict["lhs"] == Fraction("7.4") and verdict["rhs"] == Fraction("3.5")

    c6 = fw.make_saturated_cycle(6, "0.5", "0.3")
    assert c6.kind()["saturated_fuzzy_cycle"]
    assert c6.wiener_index() == 12 * Fraction("0.5") + 15 * Fraction("0.3")
    assert fw.theorem_star_formula(6, "0.5", "0.3") == Fraction(450, 16) * Fraction("0.8")
    assert fw.check_theorem_star(4, 0.7, 0.2)["holds"] is False

    found = fw.search_counterexamples("corollary-star", 20, seed=1)
    assert found["evaluated"] == 20 and found["violations"]
    again = fw.search_counterexamples("corollary-star", 20, seed=1)
    assert [v["graph"].to_fzg() for v in found["violations"]] == [v["graph"].to_fzg() for v in again["violations"]]

    assert all(passed for *_, passed in fw.repro())

    for bad in ("v a 1\ne a b 0.5\n", "v a 1\nv b 0.4\ne a b 0.5\n"):
        try:
            fw.FuzzyGraph.from_fzg(bad)
        except fw.FuzzyWienerError as e:
            assert "line" in str(e)
        else:
            raise AssertionError("invalid graph accepted")

    print("python bindings: all smoke checks passed")


if __name__ == "__main__":
    main()

"""Smoke test for the drg_resistance extension module.

Build and install first:
    pip install maturin
    maturin build --release -m crates/python/Cargo.toml
    pip install target/wheels/drg_resistance-*.whl
"""

from fractions import Fraction

import drg_resistance as drg


def main():
    cube = drg.IntersectionArray("(3,2,1;1,2,3)")
    assert cube.diameter == 3 and cube.valency == 3
    assert cube.potentials() == [7, 2, 1]
    assert cube.potentials(closed_form=True) == cube.potentials()
    assert cube.resistances() == [Fraction(7, 12), Fraction(3, 4), Fraction(5, 6)]
    assert cube.biggs_ratio() == Fraction(3, 7)
    assert cube.classify()["class"] == "PASS_STRICT"

    bs = drg.IntersectionArray("(3,2,2,2,1,1,1;1,1,1,1,1,1,3)")
    verdict = bs.classify()
    assert verdict["class"] == "EXTREMAL", verdict
    assert verdict["ratio"] == Fraction(94, 101)

    g = drg.Graph.named("hypercube", [3])
    assert g.n == 8
    assert str(g.intersection_array()) == str(cube)
    assert g.effective_resistance(0, 7) == Fraction(5, 6)
    assert abs(g.spectral_gap() - 2.0) < 1e-8
    mean, stderr = g.hitting_time(0, 7, trials=20000, seed=7)
    assert abs(mean - 10) < 4 * stderr

    assert len(drg.extremal_set()) == 4
    assert any(row["vertices"] == 102 for row in drg.catalog())
    assert '"schema":1' in drg.scan_json(3, 3, 2, 2)

    print("smoke test ok")


if __name__ == "__main__":
    main()

"""Smoke test for the compiled extension: python python/smoke_test.py"""

import json

import liecurv
from liecurv import Algebra, Scalar


def main():
    assert "nikonorov5" in liecurv.catalog_names()

    half = Scalar("1/2")
    r2 = Scalar.sqrt(2)
    assert r2 * r2 == Scalar(2)
    assert str(half + 1) == "3/2"
    assert (1 / r2) * r2 == Scalar(1)
    assert abs(float(r2) - 2 ** 0.5) < 1e-12

    n5 = Algebra.catalog("nikonorov5")
    assert n5.dim == 5 and n5.is_valid()
    assert n5.einstein_constant() == Scalar(-1)
    q = n5.curvature_operator("display")
    assert q[0][0] == "13/30"
    assert q[0][1] == "-1/15*sqrt(5)"
    assert n5.obstruction_verdict() == "obstructed"
    ob = json.loads(n5.obstruction_report())
    assert ob["full_operator"]["gcd_text"] == "x-4/15"

    n4 = Algebra.catalog("nikonorov4")
    assert n4.obstruction_verdict() == "passes"
    flags = json.loads(n4.classify("A,X3,X4"))
    assert flags["totally_geodesic"] and flags["conformal"]

    g1 = Algebra.catalog("g1", n=2)
    assert g1.einstein_constant() is None
    sampled = json.loads(g1.sample_complex_structures("X2,X3", 20, seed=3))
    assert sampled["integrable"] == 0

    g2 = Algebra.catalog("g2", alpha=["2", 0, Scalar("1/3")])
    assert Algebra.from_json(g2.to_json()).ricci() == g2.ricci()

    try:
        Algebra.catalog("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown entry accepted")

    print("smoke test ok")


if __name__ == "__main__":
    main()

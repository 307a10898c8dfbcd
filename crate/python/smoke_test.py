#!/usr/bin/env python3
"""Smoke test for the latred_py extension module.

Builds nothing itself: compile the module first with

    cargo build --release -p latred-py

then run

    python3 python/smoke_test.py
"""

import fractions
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def import_module():
    candidates = [
        ROOT / "target" / "release" / "liblatred_py.so",
        ROOT / "target" / "debug" / "liblatred_py.so",
        ROOT / "target" / "release" / "liblatred_py.dylib",
        ROOT / "target" / "debug" / "liblatred_py.dylib",
    ]
    lib = next((c for c in candidates if c.exists()), None)
    if lib is None:
        sys.exit("liblatred_py not found; run: cargo build --release -p latred-py")
    stage = pathlib.Path(tempfile.mkdtemp(prefix="latred_py_"))
    shutil.copy(lib, stage / "latred_py.so")
    sys.path.insert(0, str(stage))
    import latred_py

    return latred_py


def main():
    lr = import_module()
    checks = 0

    def ok(name, cond):
        nonlocal checks
        if not cond:
            sys.exit(f"FAIL: {name}")
        checks += 1
        print(f"ok: {name}")

    # Basis construction and exact Gram-Schmidt data.
    b = lr.Basis([[2, 0], [1, 2]])
    ok("basis shape", b.rank == 2 and b.ambient_dim == 2)
    mu, norms = lr.gram_schmidt(b)
    ok("gso mu is exact 1/2", mu[1][0] == fractions.Fraction(1, 2))
    ok("gso norms", norms == [fractions.Fraction(4), fractions.Fraction(4)])
    ok("norm decomposition", lr.vector_norm_sq(b, [1, 1]) == fractions.Fraction(13))
    ok("coordinates", lr.express_in_basis(b, [3, 2]) == [1, 1])

    # Rank-deficient input is rejected.
    try:
        lr.Basis([[1, 2], [2, 4]])
        sys.exit("FAIL: dependent rows accepted")
    except ValueError:
        ok("dependent rows rejected", True)

    # Shortest vector with the documented tie-break.
    ident = lr.Basis([[1, 0], [0, 1]])
    coeffs, norm_sq = lr.svp(ident)
    ok("svp identity", coeffs == [1, 0] and norm_sq == 1)
    coeffs, norm_sq = lr.svp(lr.Basis([[2, 1], [1, 2]]))
    ok("svp skewed", coeffs == [1, -1] and norm_sq == 2)

    # Closest vector: midpoint tie resolves to the origin.
    coeffs, dist_sq = lr.cvp(lr.Basis([[2]]), [1])
    ok("cvp midpoint tie", coeffs == [0] and dist_sq == fractions.Fraction(1))

    # Successive minima against the exhaustive oracle.
    skew = lr.Basis([[2, 1], [1, 2]])
    cert = lr.successive_minima(skew)
    ok("minima lambda", cert.lambda_sq == [2, 5])
    bound = lr.certified_box_bound(skew)
    oracle = lr.brute_force_minima(skew, bound)
    ok("oracle agreement", oracle.lambda_sq == cert.lambda_sq)

    # The shear basis fails coset minimality, then reduces to a strongly
    # reduced one.
    shear = lr.Basis([[1, 0], [1, 1]])
    p1, p2, _witness = lr.is_strongly_reduced(shear)
    ok("shear fails property 2", p1 and not p2)
    report = lr.strong_reduce(shear)
    ok("strong reduce flags", report.property1_ok and report.property2_ok)
    ok("strong reduce defect", report.defect_after == fractions.Fraction(1))
    ok("theorem 1 flag", report.theorem1_ok)
    out_rows = report.output_basis.rows()
    ok("rows attain minima", sorted(abs(x) for r in out_rows for x in r) == [0, 0, 1, 1])

    # Transform bookkeeping: output = transform * input.
    moved = lr.apply_unimodular(shear, report.transform)
    ok("transform maps input to output", moved.rows() == out_rows)

    # Five-dimensional pipeline on a seeded lattice.
    rnd = lr.generate_lattice("uniform", 5, 10, 12345)
    rep5 = lr.strong_reduce(rnd)
    ok("5-dim strongly reduced", rep5.property1_ok and rep5.property2_ok)
    ok("5-dim k profile", lr.k_profile(rep5.output_basis, rep5.minima) == rep5.k_profile)
    hkz_out, _u = lr.hkz_reduce(rnd)
    first_row_norm = sum(x * x for x in hkz_out.rows()[0])
    ok("hkz attains lambda_1", first_row_norm == rep5.minima.lambda_sq[0])

    # Bound machinery matches the published comparison table.
    ok("f_hkz(4)", abs(lr.f_hkz(4) - 3.28125) < 1e-12)
    ok("f_strong(10)", abs(lr.f_strong(10)[0] - 11.523) < 5e-3 and lr.f_strong(10)[1] == 4)
    ok("hermite_upper(8)", lr.hermite_upper(8) == 2.2)
    ok("theorem1_bound", lr.theorem1_bound(10, 6) == fractions.Fraction(11, 8))
    rows = lr.bounds_table([4, 10, 30])
    ok("table f_S(30)", abs(rows[2][2] - 2.786e10) <= 5e-4 * 2.786e10)
    beta = lr.beta_root(10)
    ok("beta_10 brackets argmax", abs((10 - lr.f_strong(10)[1]) - beta) <= 1.0)

    print(f"PASS: {checks} checks")


if __name__ == "__main__":
    main()

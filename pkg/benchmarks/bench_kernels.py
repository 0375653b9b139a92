#!/usr/bin/env python3
"""Benchmark the compiled search kernel against the pure-Python fallback.

Runs the same exhaustive sweeps through both kernels, checks the counts
agree, and prints wall times plus the speedup. The full GF(2) dim-2
dialgebra space (about 1M candidates) is the workload that motivates the
compiled kernel; pass --full to sweep it with the Python kernel too
(about a minute), otherwise the Python side runs a pinned subspace and
the full-space time is extrapolated from it.

Usage: python benchmarks/bench_kernels.py [--full]
"""

import argparse
import time

from homstruct._kernels import available, get_kernel, pykern


def time_sweep(kind, n, p, fixed, kernel):
    kern = get_kernel(kernel)
    start = time.perf_counter()
    count, _ = kern.sweep(kind, n, p, fixed, 0)
    return count, time.perf_counter() - start


def free_template(kind, n):
    total, _, _ = pykern.layout(kind, n)
    return [-1] * total


def pinned_template(kind, n, pins):
    fixed = free_template(kind, n)
    for slot in range(pins):
        fixed[slot] = 0
    return fixed


def run(full):
    rows = []
    workloads = [
        ("hom-algebra", 2, 2, free_template("hom-algebra", 2), 1.0),
        ("hom-leibniz", 2, 2, free_template("hom-leibniz", 2), 1.0),
        ("hom-prelie", 2, 2, free_template("hom-prelie", 2), 1.0),
    ]
    if full:
        workloads.append(("hom-dialgebra", 2, 2,
                          free_template("hom-dialgebra", 2), 1.0))
        workloads.append(("hlsda", 2, 2, free_template("hlsda", 2), 1.0))
    else:
        # pin the first 8 slots to zero: 2^12 candidates instead of 2^20
        workloads.append(("hom-dialgebra", 2, 2,
                          pinned_template("hom-dialgebra", 2, 8), 256.0))
        workloads.append(("hlsda", 2, 2,
                          pinned_template("hlsda", 2, 8), 256.0))

    have_compiled = "compiled" in available()
    print(f"kernels available: {', '.join(available())}")
    header = f"{'workload':<28} {'count':>8} {'python':>10} "
    header += f"{'compiled':>10} {'speedup':>8}" if have_compiled else ""
    print(header)
    for kind, n, p, fixed, scale in workloads:
        free = sum(1 for x in fixed if x < 0)
        label = f"{kind} n={n} p={p} (2^{free})"
        count_py, t_py = time_sweep(kind, n, p, fixed, "python")
        if have_compiled:
            count_c, t_c = time_sweep(kind, n, p, fixed, "compiled")
            assert count_py == count_c, (kind, count_py, count_c)
            speedup = t_py / t_c if t_c > 0 else float("inf")
            print(f"{label:<28} {count_py:>8} {t_py:>9.3f}s {t_c:>9.4f}s "
                  f"{speedup:>7.0f}x")
        else:
            print(f"{label:<28} {count_py:>8} {t_py:>9.3f}s")
        if scale != 1.0:
            print(f"{'':28} (full space is ~{scale:.0f}x this subspace; "
                  f"python estimate {t_py * scale:.0f}s)")

    if have_compiled:
        start = time.perf_counter()
        kern = get_kernel("compiled")
        count, violations, _ = kern.audit(
            "hom-dialgebra", "hlsda", 2, 2,
            free_template("hom-dialgebra", 2))
        t = time.perf_counter() - start
        print(f"\nfull dialgebra-vs-left-disymmetry audit (compiled): "
              f"{count} dialgebras, {violations} violations, {t:.2f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true",
                        help="run the 2^20 spaces through the python "
                             "kernel as well")
    run(parser.parse_args().full)


if __name__ == "__main__":
    main()

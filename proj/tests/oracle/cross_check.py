#!/usr/bin/env python3
"""Recomputes derived values with mpmath and compares them with the abp binary."""
import json
import subprocess
import sys

from mpmath import findroot, floor, frac, mp, mpf, sqrt

mp.dps = 60


def run(exe, *args):
    res = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
    if res.returncode != 0:
        raise SystemExit(f"{' '.join(args)}: exit {res.returncode}: {res.stderr}")
    return json.loads(res.stdout)


def beatty(alpha, n):
    return int(floor(n / alpha))


def thm3_rows(alpha, beta, n_max):
    gamma = 1 - alpha - beta
    a = {beatty(alpha, n) for n in range(1, 4 * n_max + 10)}
    limit = beatty(gamma, n_max) + 2
    bt = [beatty(beta, n) - (beatty(beta, n) in a) for n in range(1, 4 * n_max + 10)]
    taken = a | set(bt)
    ct = [m for m in range(1, limit + 1) if m not in taken][:n_max]
    return [(n, beatty(gamma, n), ct[n - 1]) for n in range(1, n_max + 1)]


def main():
    exe = sys.argv[1]
    failures = []

    def expect(cond, what):
        if not cond:
            failures.append(what)

    phi = (1 + sqrt(5)) / 2
    tau = findroot(lambda x: x**3 - x**2 - x - 1, 1.84)

    # golden table
    doc = run(exe, "generate", "--preset", "golden-thm1", "--n", "15")
    for row in doc["rows"]:
        n = row["n"]
        expect(row["a"] == beatty(1 / phi**3, n), f"golden a({n})")
        expect(row["b"] == beatty(1 / phi**4, n), f"golden b({n})")
        expect(row["c"] == beatty(1 / phi, n), f"golden c({n})")
    for (n, c, ct), row in zip(thm3_rows(1 / phi**3, 1 / phi**4, 15), doc["rows"]):
        expect(row["ct"] == ct, f"golden c~({n})")

    # tribonacci table, including the regenerated c and c~ rows
    doc = run(exe, "generate", "--preset", "tribonacci-thm3", "--n", "15")
    for (n, c, ct), row in zip(thm3_rows(1 / tau**3, 1 / tau**2, 15), doc["rows"]):
        expect(row["c"] == c and row["ct"] == ct, f"tribonacci c/c~({n})")

    # fractional triples of the golden triple
    for m, u, v in ((13, "0.30495", "0.04257"), (19, "0.72136", "0.91796")):
        expect(abs(frac((m + 1) / phi**3) - mpf(u)) < 5e-6, f"u_{m}")
        expect(abs(frac((m + 1) / phi**4) - mpf(v)) < 5e-6, f"v_{m}")

    # closed-form densities
    a, b = sqrt(2) / 4, sqrt(3) / 6
    g = 1 - a - b
    p = [g / 2, 1 - (a * a + b * b + g * g) / (2 * g), (a * a + b * b) / (2 * g)]
    doc = run(exe, "densities", "--alpha", "sqrt(2)/4", "--beta", "sqrt(3)/6", "--n", "100000")
    for d in range(3):
        got = mpf(doc["rows"][d]["predicted"])
        expect(abs(got - p[d]) < 1e-9, f"P({d})")
        expect(abs(doc["rows"][d]["empirical"] - p[d]) < 0.02, f"empirical P({d})")

    # witness
    a, b = sqrt(2) - 1, sqrt(5) - 2
    g = 1 - a - b
    B = lambda x, m: frac((m + 1) * x) < x  # noqa: E731
    m = next(m for m in range(1, 101) if B(a, m) and B(b, m + 1) and B(g, m + 1) and B(a, m + 2))
    doc = run(exe, "witness", "--alpha", "sqrt(2)-1", "--beta", "sqrt(5)-2", "--limit", "100")
    expect(doc["summary"]["m"] == m == 7, f"witness {doc['summary'].get('m')} vs {m}")

    for f in failures:
        print("FAIL", f)
    print(f"{'ok' if not failures else 'failed'}: oracle cross-check")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

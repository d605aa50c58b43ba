"""Compare the sternpoly CLI against the brute-force oracle."""
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
import stern_oracle as oracle  # noqa: E402

GRID = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)]
failures = []
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def cli(*args):
    out = subprocess.run([sys.argv[1], *map(str, args), "--format", "json"],
                         check=True, capture_output=True, text=True).stdout
    return json.loads(out)


def poly(j):
    return {int(e): int(c) for e, c in j["terms"]}


def expect(name, got, want):
    if got != want:
        failures.append(f"{name}: got {got!r}, want {want!r}")


for t in (2, 3, 4):
    for n in list(range(0, 70)) + [1023, 1365, 4097]:
        expect(f"poly t={t} n={n}", poly(cli("poly", "--t", t, "--n", n)), oracle.stern(t, n))

for k in (1, 2, 3):
    for n in range(1, 8):
        expect(f"alpha k={k} n={n}", int(cli("alpha", "--k", k, "--n", n)["value"]), oracle.alpha(k, n))

for t, k in GRID:
    order = 200
    bits = cli("series", "--t", t, "--k", k, "--order", order)["coeffs"]
    expect(f"series t={t} k={k}", [int(c) for c in bits], oracle.h_prefix(t, k, order))

for t, k in GRID:
    for x in (Fraction(1, 2), Fraction(-1, 3)):
        depth = 3 if (t, k) == (3, 3) else 4
        got = [Fraction(v) for v in cli("cf", "--t", t, "--k", k, "--depth", depth, "--at", x)["convergents"]]
        expect(f"cf t={t} k={k} x={x}", got, [oracle.cf_value(t, k, x, d) for d in range(depth + 1)])

for k in (1, 2, 3):
    reg = cli("cf", "--t", 2, "--k", k, "--depth", 3, "--at", "1/2", "--regular")
    got = [(Fraction(a), Fraction(b)) for a, b in reg["terms"]]
    expect(f"regular k={k}", got, oracle.regular_terms(2, k, 3))

for k in (1, 2):
    ev = cli("eval", "--t", 2, "--k", k, "--alpha", "1/2", "--order", 64)
    lo, hi = Fraction(ev["ratio"]["lo"]), Fraction(ev["ratio"]["hi"])
    exact = oracle.series_value(2, k, Fraction(1, 2), 300) / oracle.series_value(2, k, Fraction(1, 2 ** (2 ** k)), 300)
    if not lo - Fraction(1, 10 ** 60) <= exact <= hi + Fraction(1, 10 ** 60):
        failures.append(f"eval k={k}: {float(exact)} outside [{float(lo)}, {float(hi)}]")

for f in failures:
    print("FAIL", f)
print(f"{'FAIL' if failures else 'PASS'}: oracle comparison ({len(failures)} mismatches)")
sys.exit(1 if failures else 0)

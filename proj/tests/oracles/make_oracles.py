# Copyright 2026 The paracomp Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates oracle_values.h from scipy and mpmath.

Usage: python3 make_oracles.py > oracle_values.h
"""

import itertools
import math
import pathlib

import mpmath
import numpy as np
from scipy import stats

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def arr(xs):
    return "{" + ", ".join(repr(float(x)) for x in xs) + "}"


def ttest_cases():
    rng = np.random.default_rng(20260101)
    cases = [[1.2, 0.8, 1.0, 1.4, 0.6]]
    for i in range(20):
        n = int(rng.integers(2, 40))
        loc = float(rng.normal(0.0, 1.0))
        scale = float(rng.uniform(0.1, 3.0))
        cases.append([round(v, 6) for v in rng.normal(loc, scale, n)])
    out = []
    for c in cases:
        r = stats.ttest_1samp(c, 0.0)
        out.append((c, float(r.statistic), float(r.pvalue)))
    return out


def spearman_cases():
    rng = np.random.default_rng(7)
    cases = [([1, 2, 3, 4], [1.0, 3.0, 2.0, 4.0])]
    for i in range(8):
        n = int(rng.integers(5, 30))
        x = rng.integers(0, 6, n).astype(float)
        y = (x + rng.normal(0, 2.0, n)).round(3)
        cases.append((list(x), list(y)))
    out = []
    for x, y in cases:
        rho, p = stats.spearmanr(x, y)
        out.append((x, y, float(rho), float(p), float(stats.pearsonr(x, y)[0])))
    return out


def two_point_kl(gamma):
    mpmath.mp.dps = 50
    g = mpmath.mpf(gamma)
    # m_t over {t, t'} at Hamming distance 0 and 1.
    z = 1 + mpmath.e ** (-g)
    m_x = [1 / z, mpmath.e ** (-g) / z]
    m_y = [m_x[1], m_x[0]]
    rec = [(a + b) / 2 for a, b in zip(m_x, m_y)]
    kl = lambda p, q: mpmath.fsum(pi * mpmath.log(pi / qi) for pi, qi in zip(p, q))
    return float(-(kl(rec, m_x) + kl(rec, m_y)) / 2)


def read_paradigm(path):
    schema, cells = None, {}
    for line in path.read_text(encoding="utf-8").splitlines():
        if line.startswith("#schema"):
            schema = [(c.split("=")[0], c.split("=")[1].split(",")) for c in line.split("\t")[1:]]
        elif line and not line.startswith("#"):
            parts = line.split("\t")
            cells[tuple(parts[:-1])] = "".join(parts[-1].split())
    meanings = list(itertools.product(*[vals for _, vals in schema]))
    return schema, meanings, [cells[m] for m in meanings]


def read_need(path, schema, meanings):
    lines = path.read_text(encoding="utf-8").splitlines()
    proj = lines[0].split("\t")[1:]
    idx = [[name for name, _ in schema].index(c) for c in proj]
    table = {}
    for line in lines[1:]:
        if line.strip():
            parts = line.split("\t")
            table[tuple(parts[:-1])] = float(parts[-1])
    w = np.array([table.get(tuple(m[i] for i in idx), 0.0) for m in meanings])
    return w / w.sum()


def ib_reference(forms, need, meanings, gamma=1.0):
    n = len(meanings)
    d = np.array([[sum(a != b for a, b in zip(u, t)) for u in meanings] for t in meanings])
    m = np.exp(-gamma * d)
    m /= m.sum(axis=1, keepdims=True)
    mass = {}
    for f, p in zip(forms, need):
        mass[f] = mass.get(f, 0.0) + p
    bits = -sum(p * math.log2(p) for p in mass.values() if p > 0)
    acc = 0.0
    for f, pw in mass.items():
        if pw == 0:
            continue
        members = [i for i in range(n) if forms[i] == f]
        rec = sum(need[i] / pw * m[i] for i in members)
        for i in members:
            acc -= need[i] * float(np.sum(rec * np.log(rec / m[i])))
    return float(bits), float(acc)


def main():
    print("// Generated by make_oracles.py from scipy and mpmath. Do not edit.")
    print("#pragma once\n\n#include <vector>\n\nnamespace oracle {\n")
    print("struct TTestCase {\n  std::vector<double> x;\n  double t;\n  double p;\n};\n")
    print("inline const std::vector<TTestCase> kTTest = {")
    for x, t, p in ttest_cases():
        print(f"    {{{arr(x)}, {t!r}, {p!r}}},")
    print("};\n")
    print("struct SpearmanCase {\n  std::vector<double> x;\n  std::vector<double> y;\n"
          "  double rho;\n  double p;\n  double pearson;\n};\n")
    print("inline const std::vector<SpearmanCase> kSpearman = {")
    for x, y, rho, p, r in spearman_cases():
        print(f"    {{{arr(x)}, {arr(y)}, {rho!r}, {p!r}, {r!r}}},")
    print("};\n")
    print(f"inline constexpr double kTwoPointAccuracy = {two_point_kl(1.0)!r};")
    print(f"inline constexpr double kTwoPointAccuracyGamma2 = {two_point_kl(2.0)!r};\n")
    schema, meanings, forms = read_paradigm(DATA / "classical_arabic_imperfective.tsv")
    need = read_need(DATA / "classical_arabic_need.tsv", schema, meanings)
    bits, acc = ib_reference(forms, need, meanings)
    print(f"inline constexpr double kArabicComplexityBits = {bits!r};")
    print(f"inline constexpr double kArabicAccuracyNats = {acc!r};")
    print(f"inline constexpr double kArabicNeed3sm = {float(need[meanings.index(('3','s','m','G'))])!r};\n")
    print("}  // namespace oracle")


if __name__ == "__main__":
    main()

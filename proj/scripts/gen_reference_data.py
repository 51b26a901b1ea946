#!/usr/bin/env python3
"""Regenerate the bundled reference sequences under data/bfiles/.

Every value is computed here from the combinatorial definition of the
sequence (brute force over the objects where that is cheap, a classical
recurrence or closed formula otherwise, with the two cross-checked on the
overlap).  Nothing here imports or calls the C++ library, so the files are
an independent oracle for it.

Univariate files use the OEIS b-file layout `n a(n)`.  Polynomial-valued
rows write a(n) in the library's polynomial text grammar.  Triangles use
three columns `n k T(n,k)`.
"""

import itertools
import math
import os
import sys
from collections import Counter, defaultdict
from fractions import Fraction

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "bfiles")

# ---------------------------------------------------------------- polynomials
# A polynomial is a Counter mapping a tuple of (var, exp) pairs to an int.

VAR_ORDER = ["a", "b", "c", "d", "f", "g", "h", "l", "p", "r", "s", "t", "u",
             "w", "x", "q", "y", "lambda"]


def mono(**exps):
    return tuple(sorted(((v, e) for v, e in exps.items() if e), key=lambda ve: VAR_ORDER.index(ve[0])))


def poly_str(p):
    """Print in the same graded-lex descending order the C++ printer uses."""
    terms = [(m, c) for m, c in p.items() if c != 0]
    if not terms:
        return "0"

    def key(term):
        m = dict(term[0])
        deg = sum(m.values())
        return (deg, tuple(m.get(v, 0) for v in VAR_ORDER))

    terms.sort(key=key, reverse=True)
    out = []
    for idx, (m, c) in enumerate(terms):
        c = Fraction(c)
        factors = [v if e == 1 else f"{v}^{e}" for v, e in m]
        mag = abs(c)
        if factors:
            body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
        else:
            body = str(mag)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------- objects

def perfect_matchings(elems):
    if not elems:
        yield []
        return
    first = elems[0]
    for i in range(1, len(elems)):
        rest = elems[1:i] + elems[i + 1:]
        for m in perfect_matchings(rest):
            yield [(first, elems[i])] + m


def set_partitions(n):
    """Restricted growth strings -> list of blocks."""
    def rec(i, rgs, m):
        if i == n:
            blocks = defaultdict(list)
            for pos, b in enumerate(rgs):
                blocks[b].append(pos + 1)
            yield list(blocks.values())
            return
        for b in range(m + 1):
            rgs.append(b)
            yield from rec(i + 1, rgs, max(m, b + 1))
            rgs.pop()
    if n == 0:
        yield []
        return
    yield from rec(0, [], 0)


def arcs_of_partition(blocks):
    arcs = []
    for blk in blocks:
        blk = sorted(blk)
        arcs.extend(zip(blk, blk[1:]))
    return arcs


def crossings(arcs):
    return sum(1 for (i1, j1), (i2, j2) in itertools.permutations(arcs, 2)
               if i1 < i2 < j1 < j2)


def nestings(arcs):
    return sum(1 for (i1, j1), (i2, j2) in itertools.permutations(arcs, 2)
               if i1 < i2 < j2 < j1)


def descents(w):
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


# ---------------------------------------------------------------- sequences

def factorials(N):
    return [math.factorial(n) for n in range(N + 1)]


def derangements(N):
    brute = [sum(1 for p in itertools.permutations(range(n)) if all(p[i] != i for i in range(n)))
             for n in range(min(N, 8) + 1)]
    rec = [1, 0]
    for n in range(2, N + 1):
        rec.append((n - 1) * (rec[-1] + rec[-2]))
    assert rec[:len(brute)] == brute
    return rec[:N + 1]


def double_factorials(N):
    out = []
    for n in range(N + 1):
        brute = sum(1 for _ in perfect_matchings(list(range(2 * n)))) if n <= 5 else None
        val = math.prod(range(1, 2 * n, 2))
        assert brute is None or brute == val
        out.append(val)
    return out


def matching_poly(n, with_nest):
    acc = Counter()
    for m in perfect_matchings(list(range(1, 2 * n + 1))):
        cr, ne = crossings(m), nestings(m)
        acc[mono(q=cr, t=ne) if with_nest else mono(q=cr)] += 1
    return acc


def catalan(N):
    return [math.comb(2 * n, n) // (n + 1) for n in range(N + 1)]


def bell(N):
    out = []
    for n in range(N + 1):
        out.append(sum(1 for _ in set_partitions(n)))
    return out


def stirling_poly(n):
    acc = Counter()
    for blocks in set_partitions(n):
        acc[mono(**{"lambda": len(blocks)})] += 1
    return acc


def q_poisson_poly(n):
    acc = Counter()
    for blocks in set_partitions(n):
        acc[mono(q=crossings(arcs_of_partition(blocks)), **{"lambda": len(blocks)})] += 1
    return acc


def noncrossing_poly(n):
    acc = Counter()
    for blocks in set_partitions(n):
        if crossings(arcs_of_partition(blocks)) == 0:
            acc[mono(**{"lambda": len(blocks)})] += 1
    if n > 0:
        # Narayana closed form cross-check.
        for k in range(1, n + 1):
            assert acc[mono(**{"lambda": k})] == math.comb(n, k) * math.comb(n, k - 1) // n
    return acc


def euler_even(N):
    """Secant numbers E_0, E_2, ... via the Seidel-Entringer triangle."""
    size = 2 * N + 1
    E = [[0] * (size + 1) for _ in range(size + 1)]
    E[0][0] = 1
    for n in range(1, size + 1):
        for k in range(1, n + 1):
            E[n][k] = E[n][k - 1] + E[n - 1][n - k]
    zigzag = [E[n][n] for n in range(size + 1)]
    out = [zigzag[2 * m] for m in range(N + 1)]
    # Brute force: down-up alternating permutations of [2m].
    for m in range(0, 4):
        cnt = sum(1 for p in itertools.permutations(range(2 * m))
                  if all((p[i] > p[i + 1]) == (i % 2 == 0) for i in range(2 * m - 1)))
        assert cnt == out[m], (m, cnt, out[m])
    return out


def little_schroeder(N):
    out = [1]
    for n in range(1, N + 1):
        out.append(sum(math.comb(n, k) * math.comb(n, k - 1) * 2 ** (k - 1) for k in range(1, n + 1)) // n)
    # Cross-check: Schroeder paths recurrence (n+1)a(n) = 3(2n-1)a(n-1) - (n-2)a(n-2).
    for n in range(3, N + 1):
        assert (n + 1) * out[n] == 3 * (2 * n - 1) * out[n - 1] - (n - 2) * out[n - 2]
    return out


def no_strong_fixed_points(N):
    def strong_fixed(p, i):
        return p[i] == i and all(p[j] < i for j in range(i)) and all(p[j] > i for j in range(i + 1, len(p)))

    brute = []
    for n in range(min(N, 8) + 1):
        brute.append(sum(1 for p in itertools.permutations(range(n))
                         if not any(strong_fixed(p, i) for i in range(n))))
    # Generating function F = P / (1 + x P), P = sum n! x^n.
    P = [math.factorial(n) for n in range(N + 1)]
    xP = [0] + P[:N]
    den = [1 + xP[0]] + xP[1:]
    inv = [Fraction(0)] * (N + 1)
    inv[0] = Fraction(1, den[0])
    for n in range(1, N + 1):
        inv[n] = -sum(den[j] * inv[n - j] for j in range(1, n + 1)) / den[0]
    F = [sum(P[j] * inv[n - j] for j in range(n + 1)) for n in range(N + 1)]
    F = [int(v) for v in F]
    assert F[:len(brute)] == brute, (F, brute)
    return F


def eulerian_poly(n):
    acc = Counter()
    for p in itertools.permutations(range(1, n + 1)):
        acc[mono(x=descents(p))] += 1
    return acc


def eulerian_poly_rec(N):
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1] + [0]
        row = [0] * n
        for k in range(n):
            row[k] = (k + 1) * (prev[k] if k < len(prev) else 0) + (n - k) * (prev[k - 1] if k >= 1 else 0)
        rows.append(row)
    return rows


def type_b_eulerian_brute(n):
    """Descents of signed permutations with the colored order and sentinel (n+1, color 0)."""
    acc = Counter()
    for p in itertools.permutations(range(1, n + 1)):
        for colors in itertools.product((0, 1), repeat=n):
            pairs = list(zip(p, colors)) + [(n + 1, 0)]
            des = sum(1 for i in range(n) if (pairs[i][1], pairs[i][0]) > (pairs[i + 1][1], pairs[i + 1][0]))
            acc[mono(x=des)] += 1
    return acc


def type_b_eulerian_rec(N):
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for k in range(n + 1):
            a = prev[k] if k < len(prev) else 0
            b = prev[k - 1] if 1 <= k <= len(prev) else 0
            row[k] = (2 * k + 1) * a + (2 * n - 2 * k + 1) * b
        rows.append(row)
    return rows


def row_to_poly(row, var):
    acc = Counter()
    for k, c in enumerate(row):
        if c:
            acc[mono(**{var: k})] += c
    return acc


# ---------------------------------------------------------------- triangles

def a108838(nmax):
    out = []
    for n in range(2, nmax + 1):
        for k in range(0, n - 1):
            val = Fraction(2, n + 1) * math.comb(n + 1, k + 2) * math.comb(n - 2, k)
            assert val.denominator == 1
            out.append((n, k, int(val)))
    return out


def a236406(nmax):
    out = []
    for n in range(1, nmax + 1):
        hist = Counter()
        for p in itertools.permutations(range(1, n + 1)):
            if any(p[i] < p[j] < p[k] for i, j, k in itertools.combinations(range(n), 3)):
                continue
            peaks = sum(1 for i in range(1, n - 1) if p[i - 1] < p[i] > p[i + 1])
            hist[peaks] += 1
        for k in range(0, max(hist) + 1):
            out.append((n, k, hist[k]))
    return out


# ---------------------------------------------------------------- output

def write_seq(name, values, header):
    with open(os.path.join(OUT, name), "w") as fh:
        fh.write(f"# {header}\n")
        for n, v in enumerate(values):
            fh.write(f"{n} {v}\n")


def write_tri(name, rows, header):
    with open(os.path.join(OUT, name), "w") as fh:
        fh.write(f"# {header}\n# columns: n k T(n,k)\n")
        for n, k, v in rows:
            fh.write(f"{n} {k} {v}\n")


def main():
    os.makedirs(OUT, exist_ok=True)
    N = 10
    write_seq("A000142.txt", factorials(N), "A000142 n!")
    write_seq("A000166.txt", derangements(N), "A000166 derangements")
    write_seq("A001147.txt", double_factorials(5), "A001147 (2n-1)!!, even moments of the perfect-matching row")
    write_seq("A067311.txt", [poly_str(matching_poly(n, False)) for n in range(6)],
              "A067311 perfect matchings of [2n] by crossings (q)")
    write_seq("qt-gaussian.txt", [poly_str(matching_poly(n, True)) for n in range(6)],
              "perfect matchings of [2n] by crossings (q) and nestings (t)")
    write_seq("A000108.txt", catalan(5), "A000108 Catalan numbers, even moments")
    write_seq("A000110.txt", bell(N), "A000110 Bell numbers")
    write_seq("A008277.txt", [poly_str(stirling_poly(n)) for n in range(N + 1)],
              "A008277 set partitions by number of blocks (lambda)")
    write_seq("A001263.txt", [poly_str(noncrossing_poly(n)) for n in range(N + 1)],
              "A001263 non-crossing set partitions by number of blocks (lambda)")
    write_seq("q-poisson.txt", [poly_str(q_poisson_poly(n)) for n in range(9)],
              "set partitions by crossings (q) and blocks (lambda)")
    write_seq("A000364.txt", euler_even(5), "A000364 secant numbers, even moments")
    write_seq("A001003.txt", little_schroeder(N), "A001003 little Schroeder numbers")
    write_seq("A052186.txt", no_strong_fixed_points(N), "A052186 permutations without strong fixed points")

    rows = eulerian_poly_rec(N)
    for n in range(0, 8):
        assert row_to_poly(rows[n], "x") == (eulerian_poly(n) if n else Counter({(): 1}))
    write_seq("A008292.txt", [poly_str(row_to_poly(rows[n], "x")) for n in range(N + 1)],
              "A008292 Eulerian polynomials, sum over S_n of x^des")

    brows = type_b_eulerian_rec(N)
    for n in range(0, 6):
        assert row_to_poly(brows[n], "x") == (type_b_eulerian_brute(n) if n else Counter({(): 1}))
    write_seq("A060187.txt", [poly_str(row_to_poly(brows[n], "x")) for n in range(N + 1)],
              "A060187 type-B Eulerian polynomials, sum over B_n of x^des")

    write_tri("A108838.txt", a108838(12), "A108838 via 2/(n+1) C(n+1,k+2) C(n-2,k)")
    write_tri("A236406.txt", a236406(9), "A236406 123-avoiding permutations of [n] by peaks")
    print("wrote", OUT, file=sys.stderr)


if __name__ == "__main__":
    main()

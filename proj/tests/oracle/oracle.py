#!/usr/bin/env python3
"""Independent reference computations for the C++ test fixtures.

Run once; the output header is checked in as tests/oracle_fixtures.hpp.

    python3 tests/oracle/oracle.py > tests/oracle_fixtures.hpp

Nothing here shares code or algorithms with the library:
  * irreducibility by Rabin's test, not trial division;
  * goodness on a non-tangent line via the interpolation identity
    sum_i g(s_i) / p'(s_i) == 0 over the curve points on the line (the t^q
    coefficient of the degree-<=q interpolant), not by polynomial reduction;
  * goodness on a tangent line, where p = (t + alpha^q)^{q+1}, via the q-th
    Hasse derivative of g at -alpha^q.
"""

import itertools
import math
import sys

import numpy as np


# -- F_p[z] helpers on coefficient lists, constant term first ----------------

def ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def pmod(a, m, p):
    a = ptrim(list(a))
    inv = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        ptrim(a)
    return a


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return ptrim(out)


def psub(a, b, p):
    n = max(len(a), len(b))
    return ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def pgcd(a, b, p):
    a, b = ptrim(list(a)), ptrim(list(b))
    while b:
        a, b = b, pmod(a, b, p)
    return a


def ppowmod(base, e, m, p):
    result, base = [1], pmod(base, m, p)
    while e:
        if e & 1:
            result = pmod(pmul(result, base, p), m, p)
        base = pmod(pmul(base, base, p), m, p)
        e >>= 1
    return result


def prime_factors(n):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def rabin_irreducible(f, p):
    n = len(f) - 1
    x = [0, 1]
    if psub(ppowmod(x, p ** n, f, p), x, p):
        return False
    for r in prime_factors(n):
        g = pgcd(f, psub(ppowmod(x, p ** (n // r), f, p), x, p), p)
        if len(g) > 1:
            return False
    return True


def least_irreducible(p, n):
    # candidates ordered by (c_{n-1}, ..., c_0) read as a base-p integer
    for v in range(p ** n):
        low = [(v // p ** i) % p for i in range(n)]
        if rabin_irreducible(low + [1], p):
            return low + [1]
    raise RuntimeError("no irreducible polynomial")


# -- F_{q^2} with elements coded as base-p integers ---------------------------

class GF:
    def __init__(self, p, l):
        self.p, self.l = p, l
        self.q = p ** l
        self.q2 = self.q * self.q
        self.n = 2 * l
        self.modulus = least_irreducible(p, self.n)
        size = self.q2
        self.digits = [[(c // p ** i) % p for i in range(self.n)] for c in range(size)]
        self.add = np.zeros((size, size), dtype=np.int64)
        for a in range(size):
            da = self.digits[a]
            for b in range(size):
                db = self.digits[b]
                self.add[a, b] = sum(((da[i] + db[i]) % p) * p ** i for i in range(self.n))
        self.neg = np.array([self.encode([(-d) % p for d in self.digits[a]]) for a in range(size)])
        # multiplication through a primitive element found by brute force
        self.exp, self.log = self._log_tables()
        self.mul = np.zeros((size, size), dtype=np.int64)
        for a in range(1, size):
            for b in range(1, size):
                self.mul[a, b] = self.exp[(self.log[a] + self.log[b]) % (size - 1)]

    def encode(self, coeffs):
        return sum(int(c) * self.p ** i for i, c in enumerate(coeffs))

    def _mul_slow(self, a, b):
        return self.encode(pmod(pmul(ptrim(list(self.digits[a])), ptrim(list(self.digits[b])), self.p),
                                self.modulus, self.p) or [0])

    def _log_tables(self):
        order = self.q2 - 1
        for g in range(2, self.q2):
            exp, x = [], 1
            for _ in range(order):
                exp.append(x)
                x = self._mul_slow(x, g)
            if x == 1 and len(set(exp)) == order:
                log = [0] * self.q2
                for k, v in enumerate(exp):
                    log[v] = k
                return np.array(exp), np.array(log)
        raise RuntimeError("no primitive element")

    def pow(self, a, e):
        if e == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp[(self.log[a] * e) % (self.q2 - 1)])

    def inv(self, a):
        return int(self.exp[(-self.log[a]) % (self.q2 - 1)])

    def from_int(self, v):
        return v % self.p


# -- curve, lines, goodness ---------------------------------------------------

def curve_points(F):
    q = F.q
    pts = []
    for y in range(F.q2):
        for x in range(F.q2):
            if F.add[F.add[F.pow(x, q), x], F.pow(y, q + 1)] == 0:
                pts.append((x, y))
    return pts


def binom_mod(n, k, p):
    if k < 0 or k > n:
        return 0
    return math.comb(n, k) % p


def goodness(F):
    """Per monomial (b-major, then a): good on every non-tangent line, and on every line."""
    q, p = F.q, F.p
    pts = curve_points(F)
    A = np.arange(q)
    B = np.arange(q * q)
    nontangent_good = np.ones((q * q, q), dtype=bool)
    strict_good = np.ones((q * q, q), dtype=bool)
    by_y = {}
    for x, y in pts:
        by_y.setdefault(y, []).append(x)
    for alpha in range(F.q2):
        alpha_q = F.pow(alpha, q)
        for beta in range(F.q2):
            gamma = F.add[beta, F.pow(beta, q)]
            tangent = gamma == F.pow(alpha, q + 1)
            if not tangent:
                roots = [t for t in range(F.q2) if F.add[F.mul[alpha, t], beta] in by_y.get(t, [])]
                assert len(roots) == q + 1
                # weight 1/p'(s) with p'(s) = s^q + alpha
                acc = np.zeros((q * q, q), dtype=np.int64)
                for s in roots:
                    w = F.inv(int(F.add[F.pow(s, q), alpha]))
                    xs = int(F.add[F.mul[alpha, s], beta])
                    xa = np.array([F.pow(xs, a) for a in A])
                    yb = np.array([F.mul[w, F.pow(s, b)] for b in B])
                    acc = F.add[acc, F.mul[yb[:, None], xa[None, :]]]
                bad = acc != 0
                nontangent_good &= ~bad
                strict_good &= ~bad
            else:
                # q-th Hasse derivative of g = (alpha t + beta)^a t^b at t0 = -alpha^q
                t0 = int(F.neg[alpha_q])
                for a in range(q):
                    for b in range(q * q):
                        if not strict_good[b, a]:
                            continue
                        total = 0
                        for j in range(a + 1):
                            c = binom_mod(a, j, p)
                            k = b + j
                            h = binom_mod(k, q, p)
                            if c == 0 or h == 0:
                                continue
                            term = F.mul[F.from_int(c * h), F.mul[F.pow(alpha, j), F.pow(beta, a - j)]]
                            term = F.mul[term, F.pow(t0, k - q)]
                            total = int(F.add[total, term])
                        if total != 0:
                            strict_good[b, a] = False
    return nontangent_good, strict_good


def digits(x, p, n):
    return [(x // p ** i) % p for i in range(n)]


def sufficient(a, b, p, l):
    q = p ** l
    w, bp = divmod(b, q)
    if not (bp < p ** (l - 1) and a < p ** (l - 1)):
        return False
    da, db = digits(a, p, l), digits(bp, p, l)
    for i in range(1, l + 1):
        if w % p ** i:
            continue
        if any(da[s] == 0 and db[s] == 0 for s in range(i)):
            return True
    return False


def onepoint_min_distance_q3_r8():
    F = GF(3, 1)
    q = 3
    pts = curve_points(F)
    basis = [(i, j) for j in range(q) for i in range(q * q) if i * q + j * (q + 1) <= 8]
    G = np.array([[F.mul[F.pow(x, i), F.pow(y, j)] for (x, y) in pts] for (i, j) in basis])
    k = len(basis)
    best = len(pts)
    msgs = np.array(list(itertools.product(range(F.q2), repeat=k)))[1:]
    words = np.zeros((len(msgs), len(pts)), dtype=np.int64)
    for r in range(k):
        words = F.add[words, F.mul[msgs[:, r][:, None], G[r][None, :]]]
    best = int((words != 0).sum(axis=1).min())
    return k, best


def power_sums(F, alpha, beta, kmax):
    q = F.q
    pts = set(curve_points(F))
    roots = [t for t in range(F.q2) if (int(F.add[F.mul[alpha, t], beta]), t) in pts]
    out = []
    for k in range(kmax + 1):
        s = 0
        for r in roots:
            s = int(F.add[s, F.pow(r, k)])
        out.append(s)
    return out


# -- emit ---------------------------------------------------------------------

def cpp_list(values):
    return "{" + ", ".join(str(v) for v in values) + "}"


def main():
    out = sys.stdout
    out.write("#pragma once\n\n")
    out.write("// Generated by tests/oracle/oracle.py; do not edit.\n\n")
    out.write("#include <cstdint>\n#include <utility>\n#include <vector>\n\n")
    out.write("namespace fixtures {\n\n")

    out.write("struct Modulus {\n  std::uint64_t p;\n  unsigned l;\n  std::vector<std::uint64_t> coeffs;\n};\n\n")
    out.write("inline const std::vector<Modulus> kModuli = {\n")
    for p, l in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (11, 1)]:
        out.write(f"    {{{p}, {l}, {cpp_list(least_irreducible(p, 2 * l))}}},\n")
    out.write("};\n\n")

    out.write("struct GoodSet {\n  std::uint64_t p;\n  unsigned l;\n"
              "  std::vector<std::pair<unsigned, unsigned>> nontangent;  // (a, b), b-major\n"
              "  std::size_t strict_count;\n};\n\n")
    out.write("inline const std::vector<GoodSet> kGood = {\n")
    for p, l in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]:
        F = GF(p, l)
        nt, st = goodness(F)
        pairs = [(a, b) for b in range(F.q2) for a in range(F.q) if nt[b, a]]
        pairs_s = "{" + ", ".join(f"{{{a}, {b}}}" for a, b in pairs) + "}"
        out.write(f"    {{{p}, {l}, {pairs_s}, {int(st.sum())}}},\n")
        print(f"goodness p={p} l={l}: {len(pairs)} / strict {int(st.sum())}", file=sys.stderr)
    out.write("};\n\n")

    out.write("struct SufficientCount {\n  std::uint64_t p;\n  unsigned l;\n  std::size_t count;\n};\n\n")
    out.write("inline const std::vector<SufficientCount> kSufficient = {\n")
    for p, l in [(3, 1), (3, 2), (3, 3), (5, 2), (2, 3), (2, 4)]:
        q = p ** l
        n = sum(sufficient(a, b, p, l) for b in range(q * q) for a in range(q))
        out.write(f"    {{{p}, {l}, {n}}},\n")
    out.write("};\n\n")

    k, d = onepoint_min_distance_q3_r8()
    out.write(f"inline constexpr std::size_t kOnePointQ3R8Dimension = {k};\n")
    out.write(f"inline constexpr std::size_t kOnePointQ3R8Distance = {d};\n\n")

    F = GF(3, 2)
    alpha, beta = 5, 7
    out.write(f"// power sums P_0 .. P_30 over the roots of the line alpha = {alpha}, beta = {beta} in F_81\n")
    out.write(f"inline constexpr std::uint64_t kPowerSumAlpha = {alpha};\n")
    out.write(f"inline constexpr std::uint64_t kPowerSumBeta = {beta};\n")
    out.write(f"inline const std::vector<std::uint64_t> kPowerSums = {cpp_list(power_sums(F, alpha, beta, 30))};\n\n")

    F = GF(3, 1)
    pts = curve_points(F)
    out.write("// canonical point order at q = 3, as (x, y) codes\n")
    out.write("inline const std::vector<std::pair<std::uint64_t, std::uint64_t>> kPointsQ3 = {"
              + ", ".join(f"{{{x}, {y}}}" for x, y in pts) + "};\n\n")

    out.write("}  // namespace fixtures\n")


if __name__ == "__main__":
    main()

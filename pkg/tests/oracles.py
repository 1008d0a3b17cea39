"""Brute-force reference computations that share no code paths with the library."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations, product


def perm_compose(s, t):
    return tuple(s[x] for x in t)


def perm_cycles(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen:
            continue
        cyc = []
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = p[i]
        out.append(cyc)
    return out


def perm_type(p):
    return tuple(sorted((len(c) for c in perm_cycles(p)), reverse=True))


def rank(p):
    return len(p) - len(perm_cycles(p))


def standard(alpha):
    images = []
    start = 0
    for a in alpha:
        images.extend(start + (i + 1) % a for i in range(a))
        start += a
    return tuple(images)


def hook_dimension(lam):
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return math.factorial(n) // hooks


def ssyt_count(lam, N):
    """Semistandard tableaux of shape ``lam`` with entries in ``1..N``."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    count = 0
    for filling in product(range(1, N + 1), repeat=len(cells)):
        t = dict(zip(cells, filling))
        if all(
            (j == 0 or t[i, j - 1] <= t[i, j]) and (i == 0 or t[i - 1, j] < t[i, j]) for (i, j) in cells
        ):
            count += 1
    return count


def monotone_brute(alpha, k):
    """Sequences of transpositions (s t), s < t, t weakly increasing, with product standard(alpha)."""
    n = sum(alpha)
    target = standard(alpha)
    trans = [(s, t) for t in range(n) for s in range(t)]
    count = 0

    def rec(cur, last_t, left):
        nonlocal count
        if left == 0:
            count += cur == target
            return
        for s, t in trans:
            if t < last_t:
                continue
            tp = list(range(n))
            tp[s], tp[t] = t, s
            rec(perm_compose(cur, tuple(tp)), t, left - 1)

    rec(tuple(range(n)), -1, k)
    return count


def proper_brute(alpha, k, d):
    n = sum(alpha)
    target = standard(alpha)
    ident = tuple(range(n))
    group = [p for p in permutations(range(n)) if p != ident]
    count = 0
    for tup in product(group, repeat=k):
        if sum(rank(p) for p in tup) != d:
            continue
        prod = ident
        for p in tup:
            prod = perm_compose(prod, p)
        count += prod == target
    if k == 0:
        return int(d == 0 and target == ident)
    return count


def coset_type_of(p, n):
    """Cosettype of the matching p({a, a+n}) against the trivial matching, labels 0..2n-1."""
    partner_t = {a: (a + n) % (2 * n) for a in range(2 * n)}
    partner_m = {}
    for a in range(n):
        x, y = p[a], p[a + n]
        partner_m[x], partner_m[y] = y, x
    seen = set()
    parts = []
    for s in range(2 * n):
        if s in seen:
            continue
        length, x = 0, s
        while True:
            seen.update((x, partner_m[x]))
            length += 1
            x = partner_t[partner_m[x]]
            if x == s:
                break
        parts.append(length)
    return tuple(sorted(parts, reverse=True))


def orthogonal_proper_brute(beta, k, d):
    """k-tuples in S_2n, no factor fixing the trivial matching, product = a fixed permutation of cosettype beta."""
    n = sum(beta)
    # fixed representative: unhatted labels fixed, hatted labels rotated within parts
    target = list(range(2 * n))
    start = 0
    for b in beta:
        for i in range(b):
            target[n + start + i] = n + start + (i + 1) % b
        start += b
    target = tuple(target)
    ident = tuple(range(2 * n))
    group = []
    for p in permutations(range(2 * n)):
        ct = coset_type_of(p, n)
        r = n - len(ct)
        if r > 0:
            group.append((p, r))
    count = 0
    for tup in product(group, repeat=k):
        if sum(r for _, r in tup) != d:
            continue
        prod = ident
        for p, _ in tup:
            prod = perm_compose(prod, p)
        count += prod == target
    return count


def laurent_by_geometric(roots, numerator, order):
    """Expand numerator / prod (N - r) in 1/N by multiplying geometric series."""
    # 1/(N - r) = N^-1 sum r^j N^-j
    coeffs = {0: Fraction(numerator)}
    for r in roots:
        new = {}
        for k, c in coeffs.items():
            for j in range(order + 1):
                if k + 1 + j <= order:
                    new[k + 1 + j] = new.get(k + 1 + j, 0) + c * Fraction(r) ** j
        coeffs = new
    return {k: c for k, c in coeffs.items() if c}


def complement(parts, offset):
    images = list(range(offset))
    start = offset
    for p in parts:
        images.extend(start + (i + 1) % p for i in range(p))
        start += p
    return tuple(images)


def fpf_partitions(m):
    def gen(rest, largest):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, largest), 1, -1):
            for tail in gen(rest - p, p):
                yield (p,) + tail

    return list(gen(m, m))


def unitary_factorizations_brute(alpha, chi, m_max):
    """All (rho, tau1, tau2) with tau1 tau2 = pi rho, one marked label per cycle, characteristic chi."""
    n = sum(alpha)
    pi = standard(alpha)
    out = []
    for m in range(0, m_max + 1):
        for rho in fpf_partitions(m):
            size = n + m
            Pi = tuple(list(pi) + list(complement(rho, n)[n:]))
            for tau2 in permutations(range(size)):
                inv = [0] * size
                for i, y in enumerate(tau2):
                    inv[y] = i
                tau1 = tuple(Pi[inv[x]] for x in range(size))
                ok = True
                for tau in (tau1, tau2):
                    for cyc in perm_cycles(tau):
                        if sum(1 for x in cyc if x < n) != 1:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    continue
                c = len(perm_cycles(Pi)) - size + len(perm_cycles(tau1)) + len(perm_cycles(tau2))
                if c == chi:
                    out.append((rho, tau1, tau2))
    return out


def involutions_fpf(labels):
    if not labels:
        yield {}
        return
    a = labels[0]
    for i in range(1, len(labels)):
        b = labels[i]
        rest = labels[1:i] + labels[i + 1:]
        for tail in involutions_fpf(rest):
            d = dict(tail)
            d[a], d[b] = b, a
            yield d


def orthogonal_configurations_brute(beta, chi, m_max):
    """All (rho, theta) pairs; labels a in 0..E-1 and hats E..2E-1."""
    n = sum(beta)
    pi = standard(beta)
    out = []
    for m in range(0, m_max + 1):
        for rho in fpf_partitions(m):
            size = n + m
            Pi = list(pi) + list(complement(rho, n)[n:])
            p2 = {}
            for a in range(size):
                p2[size + a], p2[Pi[a]] = Pi[a], size + a
            marked = lambda x: (x % size) < n
            for theta in involutions_fpf(list(range(2 * size))):
                f1 = tuple(theta[(x + size) % (2 * size)] for x in range(2 * size))
                f2 = tuple(p2[theta[x]] for x in range(2 * size))
                ok = all(sum(1 for x in cyc if marked(x)) == 1 for f in (f1, f2) for cyc in perm_cycles(f))
                if not ok:
                    continue
                c = len(perm_cycles(tuple(Pi))) - size + (len(perm_cycles(f1)) + len(perm_cycles(f2))) // 2
                if c == chi:
                    out.append((rho, tuple(theta[x] for x in range(2 * size))))
    return out

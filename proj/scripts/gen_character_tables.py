#!/usr/bin/env python3
"""Regenerate the bundled character tables by brute force.

Each group is built as an explicit permutation or matrix group.  Conjugacy
classes come from direct enumeration; irreducible characters come from
Burnside's class-multiplication algorithm (simultaneous eigenvectors of the
class-sum matrices).  Kernels, codegrees, and solvability (derived series) are
computed from the group elements, independently of the C++ library.

Writes data/tables/<name>.json and tests/oracle/spectra.json.
"""
import itertools
import json
import math
import os
import sys

import numpy as np

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def closure(gens, mul):
    elems = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = mul(a, g)
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(elems)


def perm_mul(a, b):  # apply a then b
    return tuple(b[a[i]] for i in range(len(a)))


def mat_mul_mod(p):
    def mul(a, b):
        n = int(math.isqrt(len(a)))
        out = []
        for i in range(n):
            for j in range(n):
                out.append(sum(a[i * n + k] * b[k * n + j] for k in range(n)) % p)
        return tuple(out)
    return mul


def projective(elems, mul, scalars):
    """Quotient by a central subgroup of scalar matrices."""
    canon = {}
    for e in elems:
        coset = sorted(mul(e, s) for s in scalars)
        canon[e] = coset[0]
    reps = sorted(set(canon.values()))

    def pmul(a, b):
        return canon[mul(a, b)]
    return reps, pmul


class Group:
    def __init__(self, name, elems, mul):
        self.name = name
        self.elems = elems
        self.mul = mul
        self.index = {e: i for i, e in enumerate(elems)}
        n = len(elems)
        self.table = np.zeros((n, n), dtype=np.int64)
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                self.table[i, j] = self.index[mul(a, b)]
        self.identity = next(i for i in range(n)
                             if all(self.table[i, j] == j for j in range(n)))
        self.inv = [int(np.where(self.table[i] == self.identity)[0][0]) for i in range(n)]
        self._classes()

    def _classes(self):
        n = len(self.elems)
        seen = [False] * n
        classes = []
        for i in [self.identity] + [j for j in range(n) if j != self.identity]:
            if seen[i]:
                continue
            cl = sorted({int(self.table[self.table[self.inv[g], i], g]) for g in range(n)})
            for c in cl:
                seen[c] = True
            classes.append(cl)
        # identity first, then by (element order, class size)
        def order_of(x):
            k, y = 1, x
            while y != self.identity:
                y = int(self.table[y, x])
                k += 1
            return k
        head, tail = classes[0], classes[1:]
        tail.sort(key=lambda c: (order_of(c[0]), len(c), c[0]))
        self.classes = [head] + tail
        self.class_of = {}
        for ci, cl in enumerate(self.classes):
            for e in cl:
                self.class_of[e] = ci

    def characters(self):
        """Burnside: class-sum structure constants and their common eigenvectors."""
        r = len(self.classes)
        sizes = np.array([len(c) for c in self.classes], dtype=float)
        order = len(self.elems)
        mats = []
        for j in range(r):
            m = np.zeros((r, r))
            # C_j * C_k = sum_l a_{jkl} C_l ; a_{jkl} = #{(x,y): x in C_j, y in C_k, xy = z} for fixed z in C_l
            for k in range(r):
                counts = np.zeros(r)
                for x in self.classes[j]:
                    for y in self.classes[k]:
                        counts[self.class_of[int(self.table[x, y])]] += 1
                m[k, :] = counts / sizes
            mats.append(m)
        rng = np.random.default_rng(12345)
        combo = sum(rng.standard_normal() * m for m in mats)
        # omega_j omega_k = sum_l a_{jkl} omega_l, so omega is a right
        # eigenvector of every M_j (rows indexed by k) with eigenvalue omega_j.
        _, vecs = np.linalg.eig(combo)
        chars = []
        for col in range(r):
            v = vecs[:, col]
            v = v / v[0]
            norm = sum(abs(v[i]) ** 2 / sizes[i] for i in range(r))
            deg = math.sqrt(order / norm.real)
            values = [v[i] * deg / sizes[i] for i in range(r)]
            chars.append((round(deg), values))
        assert sum(d * d for d, _ in chars) == order, self.name
        return chars

    def subgroup_from_classes(self, cls):
        return sorted(e for c in cls for e in self.classes[c])

    def derived_subgroup(self, sub):
        comms = {int(self.table[self.table[self.inv[a], self.inv[b]], self.table[a, b]])
                 for a in sub for b in sub}
        gens = sorted(comms)
        elems = set([self.identity])
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = int(self.table[a, g])
                    if c not in elems:
                        elems.add(c)
                        nxt.append(c)
            frontier = nxt
        return sorted(elems)

    def solvable(self):
        sub = list(range(len(self.elems)))
        while len(sub) > 1:
            d = self.derived_subgroup(sub)
            if len(d) == len(sub):
                return False
            sub = d
        return True


def build_groups():
    groups = []
    s3 = closure([(1, 0, 2), (1, 2, 0)], perm_mul)
    groups.append(Group("S3", s3, perm_mul))
    d4 = closure([(1, 2, 3, 0), (3, 2, 1, 0)], perm_mul)
    groups.append(Group("D4", d4, perm_mul))
    m3 = mat_mul_mod(3)
    q8 = closure([(0, 2, 1, 0), (1, 1, 1, 2)], m3)
    groups.append(Group("Q8", q8, m3))
    a4 = closure([(1, 2, 0, 3), (1, 0, 3, 2)], perm_mul)
    groups.append(Group("A4", a4, perm_mul))
    s4 = closure([(1, 2, 3, 0), (1, 0, 2, 3)], perm_mul)
    groups.append(Group("S4", s4, perm_mul))
    sl23 = closure([(1, 1, 0, 1), (1, 0, 1, 1)], m3)
    groups.append(Group("SL(2,3)", sl23, m3))
    a5 = closure([(1, 2, 0, 3, 4), (0, 1, 3, 4, 2)], perm_mul)
    groups.append(Group("A5", a5, perm_mul))
    m2 = mat_mul_mod(2)
    gl32 = closure([(1, 1, 0, 0, 1, 0, 0, 0, 1), (0, 0, 1, 1, 0, 0, 0, 1, 0)], m2)
    groups.append(Group("PSL(2,7)", gl32, m2))
    return groups


def is_integer(z, tol=1e-8):
    return abs(z.imag) < tol and abs(z.real - round(z.real)) < tol


def main():
    spectra = {}
    for g in build_groups():
        order = len(g.elems)
        chars = g.characters()
        rows = []
        for deg, vals in chars:
            rational = all(is_integer(v) for v in vals)
            kernel = [i for i, v in enumerate(vals) if abs(v - deg) < 1e-8]
            ivals = [int(round(v.real)) for v in vals] if rational else None
            rows.append((deg, ivals, kernel, vals))
        rows.sort(key=lambda r: (r[0], r[1] is None, [-x for x in (r[1] or [])], r[2], [round(v.real, 6) for v in r[3]]))
        characters = []
        spec = []
        for idx, (deg, ivals, kernel, _) in enumerate(rows):
            label = f"chi{idx + 1}"
            entry = {"label": label, "degree": deg}
            if ivals is not None:
                entry["values"] = ivals
            else:
                entry["kernel_classes"] = kernel
            characters.append(entry)
            kernel_elems = g.subgroup_from_classes(kernel)
            ker_order = len(kernel_elems)
            assert order % ker_order == 0
            kernel_index = order // ker_order
            assert kernel_index % deg == 0
            spec.append({"label": label, "degree": deg,
                         "kernel_order": ker_order, "codegree": kernel_index // deg})
        slug = g.name.lower().replace("(", "").replace(")", "").replace(",", "_")
        table = {
            "name": g.name,
            "order": order,
            "class_sizes": [len(c) for c in g.classes],
            "characters": characters,
            "solvable": g.solvable(),
        }
        path = os.path.join(ROOT, "data", "tables", f"{slug}.json")
        with open(path, "w") as fh:
            json.dump(table, fh, indent=2)
            fh.write("\n")
        spectra[g.name] = {"file": f"{slug}.json", "order": order,
                           "solvable": table["solvable"], "spectrum": spec}
        print(g.name, order, [c["degree"] for c in characters], table["solvable"], file=sys.stderr)
    with open(os.path.join(ROOT, "tests", "oracle", "spectra.json"), "w") as fh:
        json.dump(spectra, fh, indent=2)
        fh.write("\n")


if __name__ == "__main__":
    main()

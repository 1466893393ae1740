#!/usr/bin/env python3
"""Regenerates data/irreps.catalog.

Element IDs follow the built-in group constructors: S3 is the list of
permutations of (0,1,2) in lexicographic order composed as (p*q)[i] = p[q[i]];
D4 stores r^a s^b at 4*b + a; Q8 is 1,-1,i,-i,j,-j,k,-k.
"""
import cmath
import itertools
import sys
from fractions import Fraction

import numpy as np


def token(z, roots=(1, 2, 4, 3, 6, 8, 12)):
    if abs(z) < 1e-12:
        return "0"
    mag = abs(z)
    frac = Fraction(mag).limit_denominator(64)
    if abs(float(frac) - mag) > 1e-12:
        raise ValueError(f"magnitude {mag} is not a small rational")
    angle = cmath.phase(z) / (2 * cmath.pi)
    for n in roots:
        k = round(angle * n) % n
        if abs(cmath.exp(2j * cmath.pi * k / n) * mag - z) < 1e-12:
            if k == 0:
                return str(frac)
            if 2 * k == n:
                return f"-{frac}"
            return f"{frac}^{k}/{n}"
    raise ValueError(f"{z} is not a rational times a small root of unity")


def write_group(out, name, images_per_irrep):
    out.write(f"group {name}\n")
    for images in images_per_irrep:
        dim = images[0].shape[0]
        out.write(f"irrep {dim}\n")
        for g, m in enumerate(images):
            out.write(f"{g} = " + " ".join(token(v) for v in m.flatten()) + "\n")
    out.write("end\n\n")


def s3():
    perms = list(itertools.permutations(range(3)))
    w = cmath.exp(2j * cmath.pi / 3)
    basis = np.array([[1, 1], [w, w * w], [w * w, w]]) / np.sqrt(3)
    trivial, sign, two = [], [], []
    for p in perms:
        pm = np.zeros((3, 3), dtype=complex)
        for i in range(3):
            pm[p[i], i] = 1
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        trivial.append(np.eye(1, dtype=complex))
        sign.append(np.eye(1, dtype=complex) * (-1) ** inversions)
        two.append(basis.conj().T @ pm @ basis)
    return [trivial, sign, two]


def d4():
    r = np.diag([1j, -1j])
    s = np.array([[0, 1], [1, 0]], dtype=complex)
    irreps = []
    for er, es in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
        irreps.append([np.eye(1, dtype=complex) * er ** (x % 4) * es ** (x // 4) for x in range(8)])
    irreps.append([np.linalg.matrix_power(r, x % 4) @ np.linalg.matrix_power(s, x // 4) for x in range(8)])
    return irreps


def q8():
    one = np.eye(2, dtype=complex)
    i = np.diag([1j, -1j])
    j = np.array([[0, -1], [1, 0]], dtype=complex)
    k = i @ j
    units = [one, i, j, k]
    irreps = []
    for ei, ej in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
        signs = [1, ei, ej, ei * ej]
        irreps.append([np.eye(1, dtype=complex) * signs[x // 2] for x in range(8)])
    irreps.append([units[x // 2] * (-1) ** (x % 2) for x in range(8)])
    return irreps


def main():
    out = sys.stdout
    out.write("# Irreducible unitary representations of small groups.\n")
    out.write("#\n")
    out.write("#   group <name>          name accepted by make_group\n")
    out.write("#   irrep <dim>           followed by one line per element ID:\n")
    out.write("#   <id> = <dim*dim entries, row-major>\n")
    out.write("#   end\n")
    out.write("#\n")
    out.write("# An entry is 0, a rational c, c^k/N meaning c*exp(2 pi i k/N), or (re,im)\n")
    out.write("# with rational parts. Generated by scripts/gen_irreps.py.\n\n")
    write_group(out, "S3", s3())
    write_group(out, "D4", d4())
    write_group(out, "Q8", q8())


if __name__ == "__main__":
    main()

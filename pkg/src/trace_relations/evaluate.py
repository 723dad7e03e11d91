"""Evaluation of trace-word invariants on concrete matrices.

Two scalar modes share one interface: exact rationals (the certified path)
and complex floats (optional fast path).  Also provides the independent
tensor-contraction oracle used to certify the matching -> trace-word
bijection convention.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .words import FpfInvolution, InvariantMonomial, TraceWord, X

MODE_RATIONAL = "rational"
MODE_COMPLEX = "complex"

DEFAULT_CONTRACTION_CELL_CAP = 10_000_000


class ContractionCapError(Exception):
    """Contraction state space n^d exceeds the configured cap."""


@dataclass(frozen=True)
class MatrixSample:
    """Square matrix with homogeneous scalar mode."""

    n: int
    entries: tuple            # n rows, each a tuple of scalars
    mode: str = MODE_RATIONAL

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if self.mode not in (MODE_RATIONAL, MODE_COMPLEX):
            raise ValueError(f"unknown scalar mode {self.mode!r}")
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError(f"entries must form an {self.n}x{self.n} matrix")
        for row in rows:
            for e in row:
                if self.mode == MODE_COMPLEX:
                    z = complex(e)
                    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                        raise ValueError("non-finite entry in complex sample")

    def transpose(self):
        return MatrixSample(self.n,
                            tuple(zip(*self.entries)),
                            self.mode)


def _matmul(a, b, n):
    return tuple(tuple(sum(a[i][l] * b[l][j] for l in range(n)) for j in range(n))
                 for i in range(n))


def _trace(a, n):
    return sum(a[i][i] for i in range(n))


def evaluate_word(word, x):
    """Tr of the matrix product spelled by the word (X -> x, XT -> x^T)."""
    if not isinstance(word, TraceWord):
        word = TraceWord(tuple(word))
    n = x.n
    xt = tuple(zip(*x.entries))
    prod = None
    for letter in word.letters:
        factor = x.entries if letter == X else xt
        prod = factor if prod is None else _matmul(prod, factor, n)
    return _trace(prod, n)


def evaluate_monomial(monomial, x):
    val = 1
    for w in monomial.words:
        val = val * evaluate_word(w, x)
    return val


def evaluate_basis_row(d, x, basis):
    """Values of every basis invariant on one sample, in basis order."""
    if any(m.degree != d for m in basis):
        raise ValueError("basis degree mismatch")
    return [evaluate_monomial(m, x) for m in basis]


def contract_matching(inv, x, cell_cap=None):
    """Full contraction of d copies of x along a perfect matching of slots.

    Independent oracle for involution_to_monomial: sums over all assignments
    of {0..n-1} to slots that are constant on matched pairs, of the product
    over factors f of x[i(2f), i(2f+1)].  Cost n^d * d; kept deliberately
    separate from the trace-word evaluation path.
    """
    if not isinstance(inv, FpfInvolution):
        inv = FpfInvolution(tuple(inv))
    d = inv.degree
    n = x.n
    cap = cell_cap
    if cap is None:
        cap = int(os.environ.get("TRACE_RELATIONS_CAP", DEFAULT_CONTRACTION_CELL_CAP))
        cap = max(cap, DEFAULT_CONTRACTION_CELL_CAP)
    if n ** d > cap:
        raise ContractionCapError(f"contraction needs {n**d} index assignments, cap {cap}")
    pairs = [(a, b) for a, b in enumerate(inv.pairing) if a < b]
    total = 0
    for assignment in itertools.product(range(n), repeat=d):
        slot_val = [0] * (2 * d)
        for (a, b), v in zip(pairs, assignment):
            slot_val[a] = slot_val[b] = v
        term = 1
        for f in range(d):
            term = term * x.entries[slot_val[2 * f]][slot_val[2 * f + 1]]
        total = total + term
    return total


def _scalar_to_json(value, mode):
    if mode == MODE_RATIONAL:
        return str(Fraction(value))
    z = complex(value)
    return [z.real, z.imag]


def _scalar_from_json(value, mode):
    if mode == MODE_RATIONAL:
        return Fraction(value)
    re, im = value
    return complex(re, im)


def matrix_to_json(x):
    return {"n": x.n, "mode": x.mode,
            "entries": [[_scalar_to_json(e, x.mode) for e in row]
                        for row in x.entries]}


def matrix_from_json(obj):
    mode = obj["mode"]
    entries = tuple(tuple(_scalar_from_json(e, mode) for e in row)
                    for row in obj["entries"])
    return MatrixSample(int(obj["n"]), entries, mode)


def load_matrix(path):
    with open(path) as fh:
        return matrix_from_json(json.load(fh))

"""Exact group-algebra engine for relations via Young symmetrizers.

For the two-column shape with n+1 rows, each standard tableau T gives a
symmetrizer y_T = (sum over row group) * (signed sum over column group) in
the group algebra of S_{2(n+1)}.  Conjugating the canonical pair-matching by
every term of y_T and collecting terms by necklace class projects y_T onto a
coefficient vector over the degree-(n+1) invariant basis; the nonzero images
span the relation space.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .dimensions import rel_dim_formula
from .montecarlo import (METHOD_SYMMETRIZER, RelationSet, SamplerConfig,
                         normalize_vector, rank_of, stream, verify_relation)
from .words import (EnumerationCapError, FpfInvolution, class_of_involution,
                    enumerate_fpf_involutions, enumerate_invariant_basis, tau)

DEFAULT_SYMMETRIZER_N_CAP = 3   # n=4 means 42 symmetrizers x 460,800 terms

Partition = tuple


def check_partition(shape):
    shape = tuple(shape)
    if not shape or any(p < 1 for p in shape):
        raise ValueError(f"invalid partition {shape!r}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {shape!r}")
    return shape


def two_column_shape(n):
    """(2, 2, ..., 2) with n+1 parts; the unique shape carrying the relations."""
    if n < 1:
        raise ValueError("n must be positive")
    return (2,) * (n + 1)


@dataclass(frozen=True)
class StandardTableau:
    """Rows of 0-indexed entries, strictly increasing along rows and columns."""

    shape: tuple
    rows: tuple

    def __post_init__(self):
        shape = check_partition(self.shape)
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        size = sum(shape)
        if tuple(len(r) for r in rows) != shape:
            raise ValueError("row lengths do not match shape")
        if sorted(e for r in rows for e in r) != list(range(size)):
            raise ValueError("entries must be 0..size-1 exactly once")
        for r in rows:
            if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
                raise ValueError("rows must strictly increase")
        for c in range(shape[0]):
            col = [r[c] for r in rows if len(r) > c]
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                raise ValueError("columns must strictly increase")

    @property
    def size(self):
        return sum(self.shape)

    def columns(self):
        return [tuple(r[c] for r in self.rows if len(r) > c)
                for c in range(self.shape[0])]


def enumerate_standard_tableaux(shape):
    """All standard fillings, deterministic order (smallest next placement first)."""
    shape = check_partition(shape)
    size = sum(shape)
    rows = [[] for _ in shape]
    out = []

    def rec(k):
        if k == size:
            out.append(StandardTableau(shape, tuple(tuple(r) for r in rows)))
            return
        for i, row in enumerate(rows):
            c = len(row)
            if c >= shape[i]:
                continue
            if i > 0 and len(rows[i - 1]) <= c:
                continue
            row.append(k)
            rec(k + 1)
            row.pop()

    rec(0)
    return out


def _perm_from_blocks(blocks, assignments, size):
    img = list(range(size))
    for block, perm in zip(blocks, assignments):
        for src, dst in zip(block, perm):
            img[src] = dst
    return tuple(img)


def _block_perms(block):
    return list(itertools.permutations(block))


def _sign_of(block, arrangement):
    # parity of the permutation sending block[i] -> arrangement[i]
    pos = {v: i for i, v in enumerate(block)}
    perm = [pos[v] for v in arrangement]
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def row_group(t):
    """All permutations of {0..N-1} preserving each row, as image tuples."""
    blocks = [tuple(r) for r in t.rows]
    out = []
    for assignment in itertools.product(*[_block_perms(b) for b in blocks]):
        out.append(_perm_from_blocks(blocks, assignment, t.size))
    return out


def column_group(t):
    """All column-preserving permutations, each paired with its sign."""
    blocks = t.columns()
    out = []
    for assignment in itertools.product(*[_block_perms(b) for b in blocks]):
        perm = _perm_from_blocks(blocks, assignment, t.size)
        sign = 1
        for block, arr in zip(blocks, assignment):
            sign *= _sign_of(block, arr)
        out.append((perm, sign))
    return out


def compose(p, q):
    """Group product: apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def algebra_multiply(a, b):
    """Product in the group algebra; sparse dicts permutation -> coefficient."""
    out = {}
    for p, cp in a.items():
        for q, cq in b.items():
            s = compose(p, q)
            c = out.get(s, 0) + cp * cq
            if c:
                out[s] = c
            elif s in out:
                del out[s]
    return out


def algebra_scale(a, factor):
    return {p: c * factor for p, c in a.items()}


def young_symmetrizer(t):
    """y_T = (sum of row permutations) * (signed sum of column permutations)."""
    out = {}
    cols = column_group(t)
    for p in row_group(t):
        for q, sign in cols:
            s = compose(p, q)
            c = out.get(s, 0) + sign
            if c:
                out[s] = c
            elif s in out:
                del out[s]
    return out


def symmetrizer_term_count(t):
    """Pre-combination term count |row group| * |column group|."""
    rows = math.prod(math.factorial(r) for r in t.shape)
    cols = math.prod(math.factorial(len(c)) for c in t.columns())
    return rows * cols


@lru_cache(maxsize=None)
def _class_index_table(d):
    """pairing tuple -> basis index, for every matching on 2d points."""
    basis = enumerate_invariant_basis(d)
    index = {m.encode(): i for i, m in enumerate(basis)}
    table = {}
    for inv in enumerate_fpf_involutions(d):
        table[inv.pairing] = index[class_of_involution(inv)]
    return table, len(basis)


def project_to_invariants(y, n):
    """Coefficient vector of y over the degree-(n+1) basis.

    Each term (sigma, c) contributes c to the necklace class of the matching
    sigma^{-1} tau sigma.  Nonzero results are normalized; the zero vector is
    returned as-is.
    """
    d = n + 1
    t = tau(d).pairing
    try:
        table, k = _class_index_table(d)
        lookup = table.__getitem__
    except EnumerationCapError:
        # Past the involution cap: classify each conjugate on the fly.
        basis = enumerate_invariant_basis(d)
        index = {m.encode(): i for i, m in enumerate(basis)}
        k = len(basis)

        def lookup(pairing):
            return index[class_of_involution(FpfInvolution(pairing))]

    coeffs = [0] * k
    for sigma, c in y.items():
        inv_sigma = invert(sigma)
        conj = tuple(inv_sigma[t[sigma[i]]] for i in range(len(sigma)))
        coeffs[lookup(conj)] += c
    if all(v == 0 for v in coeffs):
        return tuple(coeffs)
    return normalize_vector(coeffs)


def symmetrizer_relation_space(n, config=None, allow_long=False, progress=None):
    """Stack the projected symmetrizers of the two-column shape and keep an
    independent, individually verified subset of size rel_dim_formula(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > DEFAULT_SYMMETRIZER_N_CAP and not allow_long:
        raise EnumerationCapError(
            f"symmetrizer run for n={n} is long-running; pass allow_long=True")
    if config is None:
        config = SamplerConfig(seed=0)
    d = n + 1
    basis = enumerate_invariant_basis(d)
    shape = two_column_shape(n)
    tableaux = enumerate_standard_tableaux(shape)
    selected = []
    for idx, t in enumerate(tableaux):
        if progress is not None:
            progress(idx, len(tableaux))
        vec = project_to_invariants(young_symmetrizer(t), n)
        if all(c == 0 for c in vec):
            continue
        if rank_of(selected + [list(vec)]) > len(selected):
            selected.append(list(vec))
    expected = rel_dim_formula(n)
    if len(selected) != expected:
        raise RuntimeError(
            f"symmetrizer projections span rank {len(selected)}, expected {expected}")
    vrng = stream(config.seed, "ys-verify", n)
    for vec in selected:
        if not verify_relation(tuple(vec), n, d, config.verify_trials, vrng,
                               basis=basis, config=config):
            raise RuntimeError("projected symmetrizer failed exact verification")
    return RelationSet(n=n, d=d,
                       basis=tuple(m.encode() for m in basis),
                       relations=tuple(tuple(v) for v in selected),
                       method=METHOD_SYMMETRIZER,
                       seed=config.seed,
                       entry_bound=config.entry_bound)

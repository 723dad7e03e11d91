"""Trace words, necklace classes and fixed-point-free involutions.

A degree-d invariant of the orthogonal conjugation action is a product of
traces of monomials in x and x^T with d letters in total.  Each trace factor
is a cyclic word over the two-letter alphabet {X, XT}; the whole product is a
multiset of such words.  Words are stored in a canonical form that quotients
out rotation (cyclicity of the trace) and reversal-with-letter-swap
(Tr(W) = Tr(W^T)), so equal invariants compare equal.

Fixed-point-free involutions on 2d points encode the same data as tensor
contraction patterns: slots 2i and 2i+1 (0-indexed) are the row and column
index of tensor factor i.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

X = 0   # letter for a factor x
XT = 1  # letter for a factor x^T

_LETTER_CHARS = {X: "x", XT: "t"}
_CHAR_LETTERS = {"x": X, "t": XT}

DEFAULT_INVOLUTION_CAP = 8   # (2d-1)!! growth; 8 -> 2,027,025 involutions
DEFAULT_BASIS_CAP = 14       # direct word-multiset generation stays cheap

_CAP_ENV = "TRACE_RELATIONS_CAP"


class EnumerationCapError(Exception):
    """Requested enumeration exceeds the configured resource cap."""


def _env_cap(default):
    raw = os.environ.get(_CAP_ENV)
    if raw is None:
        return default
    return int(raw)


def canonicalize_letters(letters):
    """Canonical representative of a cyclic trace word.

    Minimum, lexicographically with X < XT, over all rotations of the word
    and all rotations of the reversed word with every letter swapped.
    """
    w = tuple(letters)
    if not w:
        raise ValueError("trace word must have at least one letter")
    if any(l not in (X, XT) for l in w):
        raise ValueError(f"letters must be X or XT, got {w!r}")
    rev = tuple(1 - l for l in reversed(w))
    best = w
    for base in (w, rev):
        for r in range(len(w)):
            cand = base[r:] + base[:r]
            if cand < best:
                best = cand
    return best


@dataclass(frozen=True, order=True)
class TraceWord:
    """One trace factor; letters are stored canonically."""

    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", canonicalize_letters(self.letters))

    def __len__(self):
        return len(self.letters)

    def encode(self):
        return "".join(_LETTER_CHARS[l] for l in self.letters)


def canonicalize_word(letters):
    return TraceWord(tuple(letters))


def _word_key(word):
    # Longer words first, then lexicographic with X < XT.  This matches the
    # bit-exact class-id serialization ("xx*x", not "x*xx").
    return (-len(word), word.letters)


@dataclass(frozen=True)
class InvariantMonomial:
    """Multiset of canonical trace words; one necklace class."""

    words: tuple

    def __post_init__(self):
        ws = tuple(sorted((TraceWord(w.letters if isinstance(w, TraceWord) else w)
                           for w in self.words), key=_word_key))
        if not ws:
            raise ValueError("invariant monomial needs at least one word")
        object.__setattr__(self, "words", ws)

    @property
    def degree(self):
        return sum(len(w) for w in self.words)

    def sort_key(self):
        return tuple(_word_key(w) for w in self.words)

    def encode(self):
        return "*".join(w.encode() for w in self.words)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


def monomial_from_id(encoded):
    """Inverse of InvariantMonomial.encode."""
    words = []
    for part in encoded.split("*"):
        if not part or any(c not in _CHAR_LETTERS for c in part):
            raise ValueError(f"bad class id {encoded!r}")
        words.append(TraceWord(tuple(_CHAR_LETTERS[c] for c in part)))
    return InvariantMonomial(tuple(words))


@dataclass(frozen=True)
class FpfInvolution:
    """Fixed-point-free involution on {0, ..., 2d-1}, i.e. a perfect matching."""

    pairing: tuple

    def __post_init__(self):
        p = tuple(self.pairing)
        object.__setattr__(self, "pairing", p)
        if len(p) % 2 != 0 or not p:
            raise ValueError("pairing must cover an even, positive number of points")
        for a, b in enumerate(p):
            if not 0 <= b < len(p) or b == a or p[b] != a:
                raise ValueError(f"not a fixed-point-free involution: {p!r}")

    @property
    def degree(self):
        return len(self.pairing) // 2

    def cycles(self):
        """Transpositions as sorted 1-indexed pairs, for display."""
        return [(a + 1, b + 1) for a, b in enumerate(self.pairing) if a < b]


def tau(d):
    """The canonical involution pairing slot 2i with slot 2i+1."""
    if d < 1:
        raise ValueError("d must be positive")
    p = []
    for i in range(d):
        p += [2 * i + 1, 2 * i]
    return FpfInvolution(tuple(p))


def enumerate_fpf_involutions(d):
    """All (2d-1)!! fixed-point-free involutions on 2d points, deterministic order."""
    if d < 1:
        raise ValueError("d must be positive")
    cap = _env_cap(DEFAULT_INVOLUTION_CAP)
    if d > cap:
        raise EnumerationCapError(
            f"involution enumeration for d={d} exceeds cap {cap}; "
            f"set {_CAP_ENV} to override")
    out = []
    pairing = [-1] * (2 * d)

    def rec():
        try:
            a = pairing.index(-1)
        except ValueError:
            out.append(FpfInvolution(tuple(pairing)))
            return
        for b in range(a + 1, 2 * d):
            if pairing[b] == -1:
                pairing[a], pairing[b] = b, a
                rec()
                pairing[a] = pairing[b] = -1

    rec()
    return out


def involution_to_monomial(inv):
    """Trace-word multiset of a matching under the left/right slot convention.

    Factor i owns slots 2i (left / row index) and 2i+1 (right / column index).
    Entering a factor through its left slot contributes the letter X and exits
    through the right slot; entering through the right slot contributes XT and
    exits left.  Each traversal cycle closes up into one trace word.
    """
    if not isinstance(inv, FpfInvolution):
        inv = FpfInvolution(tuple(inv))
    p = inv.pairing
    d = len(p) // 2
    seen = [False] * d
    words = []
    for start in range(d):
        if seen[start]:
            continue
        letters = []
        f, entered_left = start, True
        while True:
            seen[f] = True
            letters.append(X if entered_left else XT)
            exit_slot = 2 * f + (1 if entered_left else 0)
            s = p[exit_slot]
            f, entered_left = s // 2, (s % 2 == 0)
            if f == start:
                break
        words.append(TraceWord(tuple(letters)))
    return InvariantMonomial(tuple(words))


@lru_cache(maxsize=None)
def canonical_words(length):
    """All canonical trace words of the given length, sorted."""
    found = {canonicalize_letters(bits)
             for bits in itertools.product((X, XT), repeat=length)}
    return tuple(TraceWord(w) for w in sorted(found))


def enumerate_invariant_basis(d):
    """Ordered degree-d spanning set; fixes the coordinate system for relations.

    Generated directly as multisets of canonical words (no involution
    enumeration), so it works past the involution cap.
    """
    if d < 1:
        raise ValueError("d must be positive")
    cap = _env_cap(DEFAULT_BASIS_CAP)
    if d > cap:
        raise EnumerationCapError(
            f"basis enumeration for d={d} exceeds cap {cap}; "
            f"set {_CAP_ENV} to override")
    pool = sorted((w for m in range(1, d + 1) for w in canonical_words(m)),
                  key=_word_key)
    out = []

    def rec(i, remaining, acc):
        if remaining == 0:
            out.append(InvariantMonomial(tuple(acc)))
            return
        for j in range(i, len(pool)):
            w = pool[j]
            if len(w) <= remaining:
                rec(j, remaining - len(w), acc + [w])

    rec(0, d, [])
    return sorted(out, key=InvariantMonomial.sort_key)


def class_of_involution(inv):
    """Canonical class id (serialized necklace class) of a matching."""
    return involution_to_monomial(inv).encode()

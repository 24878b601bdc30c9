"""Bit-vector helpers for F2 linear algebra on int-encoded vectors.

A vector in F2^n is an int in [0, 2^n).  Basis vector i (1-based) is
1 << (n - i), so coordinate 1 sits in the most significant bit and
numeric order on ints equals lexicographic order on the serialized
bitstrings.
"""

from __future__ import annotations

from functools import reduce
from operator import xor
from typing import Iterable

MAX_DIM = 24


def check_dim(n: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"ambient dimension must be in 1..{MAX_DIM}, got {n}")


def check_vector(v: int, n: int) -> None:
    if not 0 <= v < (1 << n):
        raise ValueError(f"vector {v} out of range for dimension {n}")


def basis_vector(i: int, n: int) -> int:
    """The i-th standard basis vector, 1-based."""
    if not 1 <= i <= n:
        raise ValueError(f"basis index {i} out of range 1..{n}")
    return 1 << (n - i)


def all_ones(n: int) -> int:
    """Sum of all basis vectors."""
    return (1 << n) - 1


def xor_all(vectors: Iterable[int]) -> int:
    return reduce(xor, vectors, 0)


def format_vector(v: int, n: int) -> str:
    """Length-n bitstring, coordinate 1 first."""
    return format(v, f"0{n}b")


def parse_vector(text: str) -> tuple[int, int]:
    """Parse a bitstring into (value, dimension)."""
    if not text or any(c not in "01" for c in text):
        raise ValueError(f"not a bitstring: {text!r}")
    return int(text, 2), len(text)


def rank(vectors: Iterable[int]) -> int:
    """Rank over F2, by elimination on leading bits."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            b = v.bit_length() - 1
            if b not in basis:
                basis[b] = v
                break
            v ^= basis[b]
    return len(basis)


def is_independent(vectors: Iterable[int]) -> bool:
    vecs = list(vectors)
    return rank(vecs) == len(vecs)


def span(vectors: Iterable[int]) -> list[int]:
    """All F2-linear combinations, ascending; always contains 0."""
    out = {0}
    for v in vectors:
        if v not in out:
            out |= {v ^ w for w in out}
    return sorted(out)

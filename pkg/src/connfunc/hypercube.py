"""The hypercube on transversals, induced components, and buffered paths.

A transversal of ``n`` legs is an ``n``-bit word whose bit ``i-1`` is set
iff it picks ``y_i`` rather than ``x_i``.  Complementing the transversal
inside ``E_n`` flips every bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels
from .core import ConnFuncError


def word_mask(n: int) -> int:
    return (1 << n) - 1


def complement_word(w: int, n: int) -> int:
    return w ^ word_mask(n)


def x_count(w: int, n: int) -> int:
    """Number of legs on which ``w`` picks ``x_i``."""
    return n - bin(w).count("1")


def even_parity(w: int, n: int) -> bool:
    return x_count(w, n) % 2 == 0


def hn_adjacent(a: int, b: int) -> bool:
    d = a ^ b
    return d != 0 and d & (d - 1) == 0


def induced_components(words: Iterable[int], n: int) -> list[frozenset[int]]:
    """Connected components of ``H_n`` induced on ``words``, ordered by least member."""
    member = np.zeros(1 << n, dtype=np.bool_)
    ws = list(words)
    if not ws:
        return []
    member[np.asarray(ws, dtype=np.int64)] = True
    labels = _kernels.cube_components(member, n)
    comps: dict[int, set[int]] = {}
    for w in np.nonzero(member)[0]:
        comps.setdefault(int(labels[w]), set()).add(int(w))
    return [frozenset(comps[k]) for k in sorted(comps)]


def f(m: int) -> int:
    """Length of the constructed buffered path in ``H_{2m}``."""
    if m < 1:
        raise ConnFuncError("m must be a positive integer")
    if m % 2:
        return (2 ** (m + 1) + 2) // 3
    return (2 ** (m + 1) + 4) // 3


@dataclass(frozen=True)
class BufferedPath:
    m: int
    path: tuple[int, ...]

    @property
    def n(self) -> int:
        return 2 * self.m

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def closure(self) -> frozenset[int]:
        """Path vertices together with their complements."""
        return frozenset(self.path) | {complement_word(w, self.n) for w in self.path}

    def to_json(self) -> dict:
        n = self.n
        return {
            "m": self.m,
            "length": self.length,
            "path": [format(w, f"#0{n + 2}b") for w in self.path],
            "buffered": is_buffered(self),
        }

    @classmethod
    def from_json(cls, data) -> BufferedPath:
        return cls(int(data["m"]), tuple(int(w, 0) for w in data["path"]))


# suffix words on the two new legs: bit 0 -> leg 2m+1, bit 1 -> leg 2m+2
_XX, _XY, _YY = 0b00, 0b10, 0b11

# i = 8q + r  ->  (old index 4q + shift, suffix on the two new legs)
_STEPS = (
    (0, _XX), (1, _XX), (2, _XX), (2, _XY),
    (2, _YY), (3, _YY), (4, _YY), (4, _XY),
)


def buffered_path(m: int) -> BufferedPath:
    """Inductive construction of a buffered path of length ``f(m)`` from all-x to all-y."""
    if m < 1:
        raise ConnFuncError("m must be a positive integer")
    path = (0b00, 0b01, 0b11)
    for k in range(1, m):
        n_old = 2 * k
        new = []
        for i in range(f(k + 1) + 1):
            q, r = divmod(i, 8)
            shift, suffix = _STEPS[r]
            new.append(path[4 * q + shift] | suffix << n_old)
        path = tuple(new)
    return BufferedPath(m, path)


def is_buffered(p: BufferedPath) -> bool:
    n, path = p.n, p.path
    k = len(path) - 1
    if k < 1 or any(w >> n for w in path):
        return False
    if path[k] != complement_word(path[0], n):
        return False
    for i in range(k):
        if not hn_adjacent(path[i], path[i + 1]):
            return False
    allowed = {(1, k), (0, k - 1)}
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            if j == i + 1 or (i, j) in allowed:
                continue
            cj = complement_word(path[j], n)
            if hn_adjacent(path[i], path[j]) or hn_adjacent(path[i], cj):
                return False
    return True

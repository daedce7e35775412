"""Partial transposition and realignment over tripartite cuts."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import DimensionError, InvalidInputError
from .tensor import TripartiteState, _unpack, as_matrix, permute_from_front, permute_to_front


@dataclass(frozen=True)
class Bipartition:
    """Cut ``head | tail`` with a single party on the head side."""

    head: int
    tail: Tuple[int, int] = None

    def __post_init__(self):
        if self.head not in (1, 2, 3):
            raise InvalidInputError(f"head must be 1, 2 or 3, got {self.head!r}")
        expected = tuple(k for k in (1, 2, 3) if k != self.head)
        tail = expected if self.tail is None else tuple(self.tail)
        if sorted(tail) != list(expected):
            raise InvalidInputError(f"tail {tail} is not the complement of head {self.head}")
        object.__setattr__(self, "tail", tail)

    @classmethod
    def parse(cls, label: str) -> "Bipartition":
        """Parse labels like ``"2|13"``."""
        head, _, tail = label.partition("|")
        try:
            return cls(int(head), tuple(int(c) for c in tail))
        except ValueError:
            raise InvalidInputError(f"cannot parse bipartition label {label!r}") from None

    def __str__(self):
        return f"{self.head}|{''.join(map(str, self.tail))}"


CUTS = (Bipartition(1), Bipartition(2), Bipartition(3))


def _square(m, dim_a: int, dim_b: int) -> np.ndarray:
    a = as_matrix(m)
    n = dim_a * dim_b
    if a.shape != (n, n):
        raise DimensionError(f"matrix shape {a.shape} is not {n}x{n} for a {dim_a}x{dim_b} bipartition")
    return a


def partial_transpose_bipartite(m, dim_a: int, dim_b: int) -> np.ndarray:
    """Transpose on the B factor: ``out[(i,j),(k,l)] = m[(i,l),(k,j)]``."""
    a = _square(m, dim_a, dim_b).reshape(dim_a, dim_b, dim_a, dim_b)
    return a.transpose(0, 3, 2, 1).reshape(dim_a * dim_b, dim_a * dim_b)


def partial_transpose(rho, subsystem: int, dims=None) -> np.ndarray:
    """Transpose the indices of one subsystem of a tripartite operator."""
    mat, dims = _unpack(rho, dims)
    front, (m, n) = permute_to_front(mat, subsystem, dims)
    # transpose on A == full transpose of transpose on B
    front_ta = partial_transpose_bipartite(front, m, n).T
    return permute_from_front(front_ta, subsystem, dims)


def realign_bipartite(m, dim_a: int, dim_b: int) -> np.ndarray:
    """Realignment ``out[(i,j),(k,l)] = m[(i,k),(j,l)]``, shape ``dim_a^2 x dim_b^2``."""
    a = _square(m, dim_a, dim_b).reshape(dim_a, dim_b, dim_a, dim_b)
    return a.transpose(0, 2, 1, 3).reshape(dim_a * dim_a, dim_b * dim_b)


def realign(rho, cut, dims=None) -> np.ndarray:
    """Realign across ``cut`` (a :class:`Bipartition` or head index)."""
    if not isinstance(cut, Bipartition):
        cut = Bipartition(cut)
    mat, dims = _unpack(rho, dims)
    front, (m, n) = permute_to_front(mat, cut.head, dims)
    return realign_bipartite(front, m, n)

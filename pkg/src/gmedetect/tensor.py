"""Dense complex-matrix substrate for tripartite product spaces.

Basis convention: the product index of ``|i1 i2 i3>`` is
``i1*d2*d3 + i2*d3 + i3`` (subsystem 1 most significant), which is the
ordering produced by :func:`numpy.kron` with factors listed in order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import DimensionError, InvalidInputError, InvalidStateError

TOL_HERM = 1e-9
TOL_TRACE = 1e-9
TOL_NORM = 1e-9
TOL_PSD = 1e-8


def as_matrix(m) -> np.ndarray:
    """Coerce to a finite 2-D complex array."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInputError("matrix has non-finite entries")
    return a


def trace_norm(m, hermitian: bool = False) -> float:
    """Sum of singular values of ``m``.

    With ``hermitian=True`` the absolute eigenvalues are summed instead,
    which is cheaper and equal for Hermitian input.
    """
    a = as_matrix(m)
    if hermitian:
        return float(np.abs(np.linalg.eigvalsh(a)).sum())
    return float(np.linalg.svd(a, compute_uv=False).sum())


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


@dataclass(frozen=True)
class TripartiteDims:
    d1: int
    d2: int
    d3: int

    def __post_init__(self):
        for d in self.as_tuple():
            if int(d) != d or d < 1:
                raise DimensionError(f"subsystem dimensions must be positive integers, got {self.as_tuple()}")

    @classmethod
    def equal(cls, d: int) -> "TripartiteDims":
        return cls(d, d, d)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)

    @property
    def total(self) -> int:
        return self.d1 * self.d2 * self.d3

    @property
    def is_equal(self) -> bool:
        return self.d1 == self.d2 == self.d3

    def __getitem__(self, subsystem: int) -> int:
        return self.as_tuple()[_check_subsystem(subsystem) - 1]


def _check_subsystem(subsystem: int) -> int:
    if subsystem not in (1, 2, 3):
        raise InvalidInputError(f"subsystem must be 1, 2 or 3, got {subsystem!r}")
    return subsystem


def check_density_matrix(mat: np.ndarray) -> None:
    """Raise :class:`InvalidStateError` naming the first violated invariant."""
    herm_err = np.max(np.abs(mat - mat.conj().T)) if mat.size else 0.0
    if herm_err > TOL_HERM:
        raise InvalidStateError(f"Hermitian invariant violated (max |rho - rho^H| = {herm_err:.3g})")
    tr = np.trace(mat)
    if abs(tr - 1) > TOL_TRACE:
        raise InvalidStateError(f"trace invariant violated (trace = {tr.real:.12g}{tr.imag:+.3g}j)")
    lam_min = np.linalg.eigvalsh(mat).min()
    if lam_min < -TOL_PSD:
        raise InvalidStateError(f"positivity invariant violated (smallest eigenvalue {lam_min:.3g})")


@dataclass(frozen=True, eq=False)
class TripartiteState:
    """Density matrix on ``C^d1 (x) C^d2 (x) C^d3``.

    The stored matrix is a read-only copy; pass ``validate=False`` only for
    matrices already known to be valid states.
    """

    dims: TripartiteDims
    mat: np.ndarray
    validate: bool = True

    def __post_init__(self):
        dims = self.dims
        if not isinstance(dims, TripartiteDims):
            dims = TripartiteDims(*dims)
            object.__setattr__(self, "dims", dims)
        mat = as_matrix(self.mat).copy()
        n = dims.total
        if mat.shape != (n, n):
            raise DimensionError(f"matrix shape {mat.shape} does not match dims {dims.as_tuple()} (expected {n}x{n})")
        if self.validate:
            check_density_matrix(mat)
        mat.flags.writeable = False
        object.__setattr__(self, "mat", mat)

    @classmethod
    def from_pure(cls, psi, dims) -> "TripartiteState":
        psi = normalized_check(psi)
        return cls(dims, np.outer(psi, psi.conj()))

    @property
    def d(self) -> int:
        """Common subsystem dimension; only meaningful when ``dims.is_equal``."""
        return self.dims.d1


def normalized_check(v) -> np.ndarray:
    a = np.asarray(v, dtype=np.complex128).ravel()
    if not np.all(np.isfinite(a)):
        raise InvalidInputError("state vector has non-finite entries")
    nrm = np.linalg.norm(a)
    if abs(nrm - 1) > TOL_NORM:
        raise InvalidInputError(f"state vector is not normalized (norm = {nrm:.12g})")
    return a


def schmidt_spectrum(v, m: int, n: int) -> np.ndarray:
    """Squared Schmidt coefficients of ``v`` across ``C^m (x) C^n``, descending."""
    a = normalized_check(v)
    if a.size != m * n:
        raise DimensionError(f"vector of length {a.size} does not factor as {m}x{n}")
    s = np.linalg.svd(a.reshape(m, n), compute_uv=False)
    return np.sort(s**2)[::-1]


def _others(subsystem: int) -> list:
    return [k for k in (1, 2, 3) if k != subsystem]


def permute_to_front(rho, subsystem: int, dims=None):
    """Reorder tensor factors so ``subsystem`` comes first.

    The remaining two subsystems keep their ascending order. Returns the
    permuted matrix and the bipartite dimensions ``(m, n)``.
    """
    mat, dims = _unpack(rho, dims)
    _check_subsystem(subsystem)
    order = [subsystem - 1] + [k - 1 for k in _others(subsystem)]
    t = mat.reshape(dims.as_tuple() * 2).transpose(order + [k + 3 for k in order])
    m = dims[subsystem]
    return t.reshape(dims.total, dims.total), (m, dims.total // m)


def permute_from_front(mat, subsystem: int, dims) -> np.ndarray:
    """Inverse of :func:`permute_to_front` for an operator on the permuted space."""
    dims = dims if isinstance(dims, TripartiteDims) else TripartiteDims(*dims)
    mat = as_matrix(mat)
    order = [subsystem - 1] + [k - 1 for k in _others(_check_subsystem(subsystem))]
    permuted_dims = [dims.as_tuple()[k] for k in order]
    inverse = list(np.argsort(order))
    t = mat.reshape(permuted_dims * 2).transpose(inverse + [k + 3 for k in inverse])
    return t.reshape(dims.total, dims.total)


def reduced_state(rho, subsystem: int, dims=None) -> np.ndarray:
    """Partial trace over the two subsystems other than ``subsystem``."""
    front, (m, n) = permute_to_front(rho, subsystem, dims)
    return np.einsum("ajbj->ab", front.reshape(m, n, m, n))


def _unpack(rho, dims):
    if isinstance(rho, TripartiteState):
        return rho.mat, rho.dims
    if dims is None:
        raise DimensionError("dims are required when passing a raw matrix")
    dims = dims if isinstance(dims, TripartiteDims) else TripartiteDims(*dims)
    mat = as_matrix(rho)
    if mat.shape != (dims.total, dims.total):
        raise DimensionError(f"matrix shape {mat.shape} does not match dims {dims.as_tuple()}")
    return mat, dims

import itertools

import numpy as np
import pytest


def loop_partial_transpose_b(m, da, db):
    """Element-by-element (rho^{T_B})_{ij,kl} = rho_{il,kj}."""
    out = np.zeros_like(m)
    for i, j, k, l in itertools.product(range(da), range(db), range(da), range(db)):
        out[i * db + j, k * db + l] = m[i * db + l, k * db + j]
    return out


def loop_realign(m, da, db):
    """Element-by-element R_{ij,kl} = rho_{ik,jl}."""
    out = np.zeros((da * da, db * db), dtype=m.dtype)
    for i, j, k, l in itertools.product(range(da), range(da), range(db), range(db)):
        out[i * da + j, k * db + l] = m[i * db + k, j * db + l]
    return out


def loop_reduced(m, dims, keep):
    d1, d2, d3 = dims
    n = d1 * d2 * d3
    dk = dims[keep - 1]
    out = np.zeros((dk, dk), dtype=complex)
    for r in range(n):
        for c in range(n):
            ri = np.unravel_index(r, dims)
            ci = np.unravel_index(c, dims)
            if all(ri[t] == ci[t] for t in range(3) if t != keep - 1):
                out[ri[keep - 1], ci[keep - 1]] += m[r, c]
    return out


def random_unitary(n, rng):
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density(n, rng, rank=None):
    rank = rank or n
    g = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    m = g @ g.conj().T
    return m / np.trace(m).real


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

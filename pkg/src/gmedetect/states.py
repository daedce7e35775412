"""State families, random ensembles and closed-form reference values."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInputError, ParameterError
from .tensor import TripartiteDims, TripartiteState

FAMILIES = (
    "ghz_qutrit_isotropic",
    "ghz_w_qubit_mixture",
    "ghz_pure",
    "w_pure",
    "product_pure",
    "maximally_mixed",
    "haar_pure",
    "random_biseparable",
)

_SIMPLEX_TOL = 1e-12


def rng(seed: int) -> np.random.Generator:
    """Counter-based (Philox) generator; streams are platform independent."""
    return np.random.Generator(np.random.Philox(int(seed)))


def ghz_vector(d: int) -> np.ndarray:
    v = np.zeros(d**3, dtype=np.complex128)
    v[[k * (d * d + d + 1) for k in range(d)]] = 1 / np.sqrt(d)
    return v


def w_vector() -> np.ndarray:
    v = np.zeros(8, dtype=np.complex128)
    v[[1, 2, 4]] = 1 / np.sqrt(3)
    return v


def basis_vector(index: int, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=np.complex128)
    v[index] = 1
    return v


def projector(v) -> np.ndarray:
    v = np.asarray(v, dtype=np.complex128)
    return np.outer(v, v.conj())


def maximally_mixed(d: int) -> TripartiteState:
    return TripartiteState(TripartiteDims.equal(d), np.eye(d**3) / d**3)


def make_example1(x: float) -> TripartiteState:
    """Qutrit GHZ state in white noise, ``(1-x) I/27 + x |GHZ><GHZ|``."""
    if not 0 <= x <= 1:
        raise ParameterError(f"x must lie in [0, 1], got {x}")
    mat = (1 - x) / 27 * np.eye(27) + x * projector(ghz_vector(3))
    return TripartiteState(TripartiteDims.equal(3), mat)


def make_example2(x: float, y: float) -> TripartiteState:
    """Three-qubit ``(1-x-y) I/8 + x |GHZ><GHZ| + y |W><W|``."""
    if x < 0 or y < 0 or x + y > 1 + _SIMPLEX_TOL:
        raise ParameterError(f"(x, y) = ({x}, {y}) is outside the simplex x, y >= 0, x + y <= 1")
    mat = (1 - x - y) / 8 * np.eye(8) + x * projector(ghz_vector(2)) + y * projector(w_vector())
    return TripartiteState(TripartiteDims.equal(2), mat)


def example1_score_closed_form(x: float) -> float:
    return (8 + 10 * x + abs(10 * x - 1)) / 9


def _sqrt(v: float) -> float:
    # radicands that vanish exactly can round to -1e-15
    if v < 0:
        if v < -1e-10:
            raise ValueError(f"negative radicand {v}")
        return 0.0
    return float(np.sqrt(v))


def example2_bound_closed_form(x: float, y: float) -> float:
    """Closed-form concurrence bound for :func:`make_example2` (raw, unclamped)."""
    a, b = x, y
    s = _sqrt
    inner1 = 8 * s((3 - 3 * a + b) ** 2 * (9 * a**2 + b**2))
    base1 = 9 + 153 * a**2 + 6 * b + 17 * b**2 - 6 * a * (3 + b)
    inner2 = 12 * s((1 + a - b) ** 2 * (9 * a**2 + 32 * b**2))
    base2 = 9 + 45 * a**2 - 18 * a * (-1 + b) - 18 * b + 137 * b**2
    total = (
        -40
        + 3 * s((-1 - 3 * a + b) ** 2)
        + 6 * s((-1 + a + b) ** 2)
        + s((3 - 3 * a + 13 * b) ** 2)
        + s(base1 - inner1)
        + s(base1 + inner1)
        + s(base2 - inner2)
        + s(base2 + inner2)
    )
    return total / (24 * np.sqrt(2))


def haar_random_pure(dims: Sequence[int] | int, seed: int | np.random.Generator) -> np.ndarray:
    """Unitarily invariant random pure state on the product of ``dims``."""
    gen = seed if isinstance(seed, np.random.Generator) else rng(seed)
    n = int(np.prod(dims))
    z = gen.standard_normal(n) + 1j * gen.standard_normal(n)
    return z / np.linalg.norm(z)


def _product_across_cut(head: int, phi_head: np.ndarray, phi_rest: np.ndarray, d: int) -> np.ndarray:
    """``|phi_head>_head (x) |phi_rest>_rest`` in the standard 1,2,3 ordering."""
    t = np.multiply.outer(phi_head, phi_rest.reshape(d, d))
    order = {1: (0, 1, 2), 2: (1, 0, 2), 3: (1, 2, 0)}[head]
    return t.transpose(order).reshape(d**3)


def random_biseparable(d: int, components: int, seed: int | np.random.Generator) -> TripartiteState:
    """Dirichlet mixture of Haar product states, each across a uniformly chosen cut."""
    if d < 2 or components < 1:
        raise ParameterError("random_biseparable needs d >= 2 and components >= 1")
    gen = seed if isinstance(seed, np.random.Generator) else rng(seed)
    weights = gen.dirichlet(np.ones(components))
    mat = np.zeros((d**3, d**3), dtype=np.complex128)
    for w in weights:
        head = int(gen.integers(1, 4))
        psi = _product_across_cut(head, haar_random_pure(d, gen), haar_random_pure(d * d, gen), d)
        mat += w * projector(psi)
    return TripartiteState(TripartiteDims.equal(d), mat)


@dataclass(frozen=True)
class FamilyParams:
    family: str
    x: float = 0.0
    y: float = 0.0
    d: int = 2
    seed: int = 0
    components: int = 10

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.d < 1:
            raise ParameterError("d must be positive")


def make_state(p: FamilyParams) -> TripartiteState:
    """Build the state described by ``p``; parameters irrelevant to the family are ignored."""
    dims = TripartiteDims.equal(p.d)
    if p.family == "ghz_qutrit_isotropic":
        return make_example1(p.x)
    if p.family == "ghz_w_qubit_mixture":
        return make_example2(p.x, p.y)
    if p.family == "ghz_pure":
        return TripartiteState(dims, projector(ghz_vector(p.d)))
    if p.family == "w_pure":
        if p.d != 2:
            raise ParameterError("w_pure is defined for qubits only (d = 2)")
        return TripartiteState(dims, projector(w_vector()))
    if p.family == "product_pure":
        return TripartiteState(dims, projector(basis_vector(0, p.d**3)))
    if p.family == "maximally_mixed":
        return maximally_mixed(p.d)
    if p.family == "haar_pure":
        return TripartiteState(dims, projector(haar_random_pure((p.d,) * 3, p.seed)))
    if p.family == "random_biseparable":
        return random_biseparable(p.d, p.components, p.seed)
    raise InvalidInputError(p.family)  # unreachable, guarded by FamilyParams

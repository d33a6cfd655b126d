"""Fidelity between quantum states.

Three routes: the pure-pure overlap, the general density-density formula
``(tr sqrt(sqrt(rho) sigma sqrt(rho)))^2``, and the exact shortcut
``<phi|rho|phi>`` when the target is pure. Raw values may poke out of
[0, 1] by round-off; they are clamped within a small window and rejected
beyond it.
"""

from __future__ import annotations

import numpy as np

from .linalg import check_density, psd_sqrt

__all__ = [
    "CLAMP_WINDOW",
    "fidelity_pure",
    "fidelity_density",
    "fidelity_pure_target",
]

CLAMP_WINDOW = 1e-10
_NORM_ATOL = 1e-10


def _clamp(value: float) -> float:
    if value < -CLAMP_WINDOW or value > 1.0 + CLAMP_WINDOW:
        raise ValueError(f"fidelity {value:.12g} outside [0, 1] beyond round-off")
    return min(1.0, max(0.0, value))


def _check_pure(psi, name: str) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise ValueError(f"{name} must be a vector, got shape {psi.shape}")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > _NORM_ATOL:
        raise ValueError(f"{name} is not normalized: |{name}| = {norm:.12g}")
    return psi


def fidelity_pure(psi, phi) -> float:
    """``|<psi|phi>|^2`` for two normalized state vectors."""
    psi = _check_pure(psi, "psi")
    phi = _check_pure(phi, "phi")
    if psi.shape != phi.shape:
        raise ValueError(f"dimension mismatch: {psi.shape} vs {phi.shape}")
    return _clamp(abs(np.vdot(psi, phi)) ** 2)


def fidelity_density(rho, sigma) -> float:
    """``(tr sqrt(sqrt(rho) sigma sqrt(rho)))^2`` for two density matrices."""
    rho = check_density(rho, name="rho")
    sigma = check_density(sigma, dim=rho.shape[0], name="sigma")
    root = psd_sqrt(rho)
    inner = root @ sigma @ root
    trace = float(np.trace(psd_sqrt(0.5 * (inner + inner.conj().T))).real)
    return _clamp(trace**2)


def fidelity_pure_target(rho, phi) -> float:
    """``<phi|rho|phi>``: the density-density fidelity when the target is pure."""
    phi = _check_pure(phi, "phi")
    rho = check_density(rho, dim=phi.shape[0], name="rho")
    return _clamp(float(np.vdot(phi, rho @ phi).real))

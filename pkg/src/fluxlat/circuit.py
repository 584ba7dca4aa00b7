"""Circuit parameterization: JJ-array specs, capacitance matrices, coarse-grained energies.

The circuit is an array of N identical Josephson junctions (capacitance Ca,
energy EJa, ground capacitance Cga) closed by one small junction (Cb, EJb,
Cgb) with an external flux phi_ext threading the loop.  Branch variables are
the N array-junction phase drops; the small-junction phase is eliminated by
flux quantization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .constants import E2_OVER_2H_GHZ_FF, KINETIC_PS_PER_FF
from .errors import ConfigError, NumericalError


@dataclass(frozen=True)
class CircuitSpec:
    """Physical parameters of a JJ-array circuit.

    Capacitances in fF, Josephson energies in h*GHz, phi_ext in radians,
    gate charges in Cooper-pair units (one entry per array junction).
    """

    N: int
    Ca: float
    EJa: float
    Cb: float = 0.0
    EJb: float = 0.0
    Cga: float = 0.0
    Cgb: float = 0.0
    phi_ext: float = 0.0
    grounded: bool = False
    gate_charges: tuple[float, ...] = field(default=())

    def __post_init__(self):
        if self.N < 1:
            raise ConfigError(f"need at least one array junction, got N={self.N}")
        if self.Ca <= 0:
            raise ConfigError(f"array capacitance must be positive, got Ca={self.Ca}")
        for name in ("Cb", "Cga", "Cgb"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be nonnegative, got {getattr(self, name)}")
        for name in ("EJa", "EJb"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be nonnegative, got {getattr(self, name)}")
        charges = tuple(float(g) for g in self.gate_charges)
        if not charges:
            charges = (0.0,) * self.N
        if len(charges) != self.N:
            raise ConfigError(
                f"gate_charges has length {len(charges)}, expected N={self.N}"
            )
        object.__setattr__(self, "gate_charges", charges)

    @classmethod
    def from_z_wpl(cls, N, z, omega_pl, **kwargs) -> "CircuitSpec":
        """Build a spec from the array-junction impedance z and plasma frequency."""
        ca, eja = array_params_from_z_wpl(z, omega_pl)
        return cls(N=N, Ca=ca, EJa=eja, **kwargs)


@dataclass(frozen=True)
class CapacitanceMatrix:
    """Symmetric positive-definite capacitance matrix with cached inverse.

    ``kinetic_ps`` is the kernel hbar*C/(4e^2) in ps that multiplies the
    squared phase velocities in the Euclidean action.
    """

    entries: np.ndarray
    inverse: np.ndarray
    kinetic_ps: np.ndarray

    @classmethod
    def from_matrix(cls, entries) -> "CapacitanceMatrix":
        c = np.array(entries, dtype=float)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise ConfigError(f"capacitance matrix must be square, got shape {c.shape}")
        if not np.allclose(c, c.T, rtol=0.0, atol=1e-12 * max(1.0, np.abs(c).max())):
            raise NumericalError("capacitance matrix is not symmetric")
        c = 0.5 * (c + c.T)
        try:
            np.linalg.cholesky(c)
        except np.linalg.LinAlgError:
            smallest = np.linalg.eigvalsh(c)[0]
            raise NumericalError(
                f"capacitance matrix is not positive definite "
                f"(smallest eigenvalue {smallest:.6g} fF)"
            ) from None
        inv = np.linalg.solve(c, np.eye(c.shape[0]))
        inv = 0.5 * (inv + inv.T)
        resid = np.abs(c @ inv - np.eye(c.shape[0])).max()
        if resid > 1e-10:
            raise NumericalError(
                f"capacitance inverse failed residual check: |C C^-1 - I| = {resid:.3g}"
            )
        return cls(entries=c, inverse=inv, kinetic_ps=KINETIC_PS_PER_FF * c)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def build_capacitance_matrix(spec: CircuitSpec) -> CapacitanceMatrix:
    """Assemble the N x N capacitance matrix of the array-junction variables.

    Four pieces are summed: the diagonal array capacitance, the rank-one
    small-junction block Cb + Cgb in every entry, the ground-capacitance band
    (C3)_{xx'} = Cga * (N - max(x, x')), and, for a floating device only, the
    rank-one correction -b b^T / a with a = 2 Cgb + (N-1) Cga and
    b_x = Cgb + Cga (N-x).
    """
    n = spec.N
    c1 = spec.Ca * np.eye(n)
    c2 = np.full((n, n), spec.Cb + spec.Cgb)
    x = np.arange(1, n + 1)
    c3 = spec.Cga * (n - np.maximum.outer(x, x)).astype(float)
    total = c1 + c2 + c3
    if not spec.grounded:
        a = 2.0 * spec.Cgb + (n - 1) * spec.Cga
        if a > 0.0:
            b = spec.Cgb + spec.Cga * (n - x)
            total = total - np.outer(b, b) / a
    return CapacitanceMatrix.from_matrix(total)


@dataclass(frozen=True)
class DerivedParams:
    """Coarse-grained single-mode parameters and array-junction scales (h*GHz)."""

    EC: float
    EJ: float
    EL: float
    ECa: float
    z: float
    omega_pl: float


def derived_parameters(spec: CircuitSpec) -> DerivedParams:
    """Coarse-grained parameters: EC = e^2/(2Cb), EJ = EJb, EL = EJa/N,
    plus the array-junction impedance z = sqrt(2 ECa/EJa)/pi and plasma
    frequency sqrt(8 ECa EJa)."""
    if spec.Cb <= 0:
        raise ConfigError("derived EC requires Cb > 0")
    if spec.EJa <= 0:
        raise ConfigError("derived z and omega_pl require EJa > 0")
    ec = E2_OVER_2H_GHZ_FF / spec.Cb
    eca = E2_OVER_2H_GHZ_FF / spec.Ca
    z = np.sqrt(2.0 * eca / spec.EJa) / np.pi
    wpl = np.sqrt(8.0 * eca * spec.EJa)
    return DerivedParams(
        EC=ec, EJ=spec.EJb, EL=spec.EJa / spec.N, ECa=eca, z=float(z), omega_pl=float(wpl)
    )


def array_params_from_z_wpl(z: float, omega_pl: float) -> tuple[float, float]:
    """Invert (z, omega_pl) for the array-junction (Ca in fF, EJa in h*GHz).

    From z = sqrt(2 ECa/EJa)/pi and omega_pl = sqrt(8 ECa EJa):
    EJa = omega_pl/(2 pi z) and ECa = omega_pl * pi * z / 4.
    """
    if z <= 0 or omega_pl <= 0:
        raise ConfigError(f"z and omega_pl must be positive, got ({z}, {omega_pl})")
    eja = omega_pl / (2.0 * np.pi * z)
    eca = omega_pl * np.pi * z / 4.0
    return E2_OVER_2H_GHZ_FF / eca, eja

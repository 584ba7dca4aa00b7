"""Euclidean lattice action, gradient, winding numbers, and gate-charge phase.

Field configurations are plain float arrays of shape ``(..., N, Nt)``: N
junction variables by Nt time slices, with arbitrary leading batch axes
(used to vectorize over Markov chains).  The time direction is periodic.

Dimensionless action for a configuration theta:

    S = sum_t [ w_t^T K w_t / (2 dt) + 2 pi dt_ns U(theta_t) ]

with K = hbar*C/(4e^2) in ps, dt the lattice spacing in ps, and U the
potential in h*GHz (so 2 pi * U[GHz] * dt[ns] is dimensionless).  For
compact variables w_t is the nearest-image wrapped difference
theta_{t+1} - theta_t in (-pi, pi]; noncompact test modes use the plain
difference and carry no winding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import CapacitanceMatrix, CircuitSpec, build_capacitance_matrix
from .constants import TWO_PI, capacitance_ff, KINETIC_PS_PER_FF
from .errors import ConfigError, NumericalError


@dataclass(frozen=True)
class LatticeGeometry:
    """Temporal lattice: spacing dt_ps (ps) and number of slices nt."""

    dt_ps: float
    nt: int

    def __post_init__(self):
        if self.dt_ps <= 0:
            raise ConfigError(f"lattice spacing must be positive, got {self.dt_ps} ps")
        if self.nt < 2:
            raise ConfigError(f"need at least two time slices, got nt={self.nt}")

    @property
    def dt_ns(self) -> float:
        return self.dt_ps * 1e-3

    @property
    def beta_ps(self) -> float:
        """Total Euclidean extent hbar*beta = nt * dt, in ps."""
        return self.nt * self.dt_ps

    @property
    def beta_ns(self) -> float:
        return self.nt * self.dt_ps * 1e-3


def wrap_angle(delta):
    """Reduce angle differences to the principal interval (-pi, pi]."""
    delta = np.asarray(delta, dtype=float)
    out = delta - TWO_PI * np.round(delta / TWO_PI)
    return np.where(out <= -np.pi, out + TWO_PI, out)


def wrapped_delta(a, b):
    """Nearest-image difference b - a in (-pi, pi]."""
    return wrap_angle(np.asarray(b, dtype=float) - np.asarray(a, dtype=float))


def canonicalize(theta):
    """Map angles to the canonical branch [0, 2 pi)."""
    return np.mod(theta, TWO_PI)


@dataclass(frozen=True)
class JunctionArrayPotential:
    """U(theta) = EJa sum_x (1 - cos theta_x) + EJb (1 - cos(sum_x theta_x - phi_ext)).

    The constant offsets make U >= 0; they cancel in every observable.
    """

    EJa: float
    EJb: float
    phi_ext: float

    def energy(self, theta):
        """Potential per time slice in h*GHz; theta (..., N, Nt) -> (..., Nt)."""
        u = self.EJa * (1.0 - np.cos(theta)).sum(axis=-2)
        if self.EJb != 0.0:
            u = u + self.EJb * (1.0 - np.cos(theta.sum(axis=-2) - self.phi_ext))
        return u

    def gradient(self, theta):
        g = self.EJa * np.sin(theta)
        if self.EJb != 0.0:
            g = g + self.EJb * np.sin(theta.sum(axis=-2, keepdims=True) - self.phi_ext)
        return g


@dataclass(frozen=True)
class QuadraticPotential:
    """U(theta) = sum_x EL_x theta_x^2 / 2, for noncompact harmonic test modes."""

    EL: np.ndarray

    def energy(self, theta):
        el = np.asarray(self.EL, dtype=float)
        return 0.5 * np.einsum("x,...xt->...t", el, theta**2)

    def gradient(self, theta):
        el = np.asarray(self.EL, dtype=float)
        return el[..., :, None] * theta


@dataclass(frozen=True)
class LatticeModel:
    """Kinetic kernel plus potential; everything the sampler needs to run.

    ``kinetic_ps`` is the (N, N) kernel hbar*C/(4e^2) in ps.  ``compact``
    selects wrapped link differences and enables winding/instanton machinery.
    """

    kinetic_ps: np.ndarray
    potential: object
    compact: bool

    @property
    def n_sites(self) -> int:
        return self.kinetic_ps.shape[0]

    @classmethod
    def from_circuit(cls, spec: CircuitSpec, cap: CapacitanceMatrix | None = None):
        """Compact U(1) model of a JJ-array circuit (gate charges excluded:
        sampling runs at zero gate charge, reweighting restores them)."""
        if cap is None:
            cap = build_capacitance_matrix(spec)
        elif cap.n != spec.N:
            raise ConfigError(f"capacitance matrix is {cap.n}x{cap.n}, spec has N={spec.N}")
        pot = JunctionArrayPotential(EJa=spec.EJa, EJb=spec.EJb, phi_ext=spec.phi_ext)
        return cls(kinetic_ps=cap.kinetic_ps, potential=pot, compact=True)

    @classmethod
    def harmonic(cls, EC, EL):
        """Noncompact oscillator mode(s) with H = 4 EC n^2 + EL theta^2 / 2 each.

        EC and EL in h*GHz, scalars or per-mode arrays.  Exact frequency
        sqrt(8 EC EL); used to validate unit conventions end to end.
        """
        ec = np.atleast_1d(np.asarray(EC, dtype=float))
        el = np.atleast_1d(np.asarray(EL, dtype=float))
        if ec.shape != el.shape:
            raise ConfigError("EC and EL must have matching shapes")
        if np.any(ec <= 0) or np.any(el <= 0):
            raise ConfigError("harmonic test modes need EC > 0 and EL > 0")
        kin = np.diag(KINETIC_PS_PER_FF * np.array([capacitance_ff(e) for e in ec]))
        return cls(kinetic_ps=kin, potential=QuadraticPotential(EL=el), compact=False)


def time_deltas(theta, compact: bool):
    """Link differences theta_{t+1} - theta_t with periodic time, wrapped if compact."""
    d = np.roll(theta, -1, axis=-1) - theta
    return wrap_angle(d) if compact else d


def action_real(theta, model: LatticeModel, geom: LatticeGeometry):
    """Re S / hbar.  Batched: (..., N, Nt) -> (...)."""
    theta = np.asarray(theta, dtype=float)
    _check_shape(theta, model, geom)
    w = time_deltas(theta, model.compact)
    kw = np.einsum("xy,...yt->...xt", model.kinetic_ps, w)
    kinetic = 0.5 / geom.dt_ps * np.einsum("...xt,...xt->...", w, kw)
    potential = TWO_PI * geom.dt_ns * model.potential.energy(theta).sum(axis=-1)
    return kinetic + potential


def action_gradient(theta, model: LatticeModel, geom: LatticeGeometry):
    """d(Re S / hbar)/d theta_{x,t}, smooth away from wrap boundaries."""
    theta = np.asarray(theta, dtype=float)
    _check_shape(theta, model, geom)
    w = time_deltas(theta, model.compact)
    kw = np.einsum("xy,...yt->...xt", model.kinetic_ps, w)
    kinetic = (np.roll(kw, 1, axis=-1) - kw) / geom.dt_ps
    return kinetic + TWO_PI * geom.dt_ns * model.potential.gradient(theta)


def winding_numbers(theta, compact: bool = True):
    """Per-junction and collective winding numbers.

    Per junction: N_x = (1/2pi) sum_t wrap(theta_{x,t+1} - theta_{x,t}).
    Collective: the same rule applied to the slice sums Theta_t = sum_x
    theta_{x,t}, which detects collective slips where every junction moves
    by 2 pi / N.  Returns integer arrays (shapes (..., N) and (...,)).
    """
    theta = np.asarray(theta, dtype=float)
    if not compact:
        per = np.zeros(theta.shape[:-1], dtype=np.int64)
        return per, np.zeros(theta.shape[:-2], dtype=np.int64)
    w = time_deltas(theta, True)
    per = np.rint(w.sum(axis=-1) / TWO_PI).astype(np.int64)
    total = theta.sum(axis=-2)
    coll_links = wrap_angle(np.roll(total, -1, axis=-1) - total)
    coll = np.rint(coll_links.sum(axis=-1) / TWO_PI).astype(np.int64)
    return per, coll


def imag_phase(theta, gate_charges):
    """Im S / hbar = sum_x n_gx sum_t wrap(theta_{x,t+1} - theta_{x,t}).

    By telescoping this equals 2 pi sum_x n_gx N_x; both forms are computed
    and cross-checked to 1e-10 absolute.
    """
    theta = np.asarray(theta, dtype=float)
    ng = np.asarray(gate_charges, dtype=float)
    if ng.shape[-1] != theta.shape[-2]:
        raise ConfigError(
            f"gate_charges has length {ng.shape[-1]}, expected {theta.shape[-2]}"
        )
    w = time_deltas(theta, True)
    link_sum = np.einsum("x,...xt->...", ng, w)
    per, _ = winding_numbers(theta)
    from_windings = TWO_PI * np.einsum("x,...x->...", ng, per.astype(float))
    if not np.allclose(link_sum, from_windings, rtol=0.0, atol=1e-10):
        raise NumericalError(
            "imag_phase cross-check failed: link sum and winding form disagree "
            f"by {np.abs(link_sum - from_windings).max():.3g}"
        )
    return link_sum


def _check_shape(theta, model, geom):
    if theta.shape[-2] != model.n_sites or theta.shape[-1] != geom.nt:
        raise ConfigError(
            f"configuration shape {theta.shape[-2:]} does not match "
            f"(N, Nt) = ({model.n_sites}, {geom.nt})"
        )

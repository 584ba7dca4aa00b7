"""Unit conventions and physical constants.

Internal unit system: energies are frequencies in h*GHz, times in ps (ns
where noted), capacitances in fF.  Two derived constants do all conversions:

* ``E2_OVER_2H_GHZ_FF``: charging energy of 1 fF, e^2/(2hC) = 19.370 GHz/fF.
* ``KINETIC_PS_PER_FF``: kinetic kernel per fF, hbar*C/(4e^2) = 1.02706 ps/fF.

CODATA 2018 (exact in the 2019 SI) values of e and h are used.
"""

import math

# SI, exact since the 2019 redefinition
E_CHARGE = 1.602176634e-19  # C
PLANCK_H = 6.62607015e-34  # J s
HBAR = PLANCK_H / (2.0 * math.pi)

# e^2/(2h) in GHz*fF: E_C [GHz] = E2_OVER_2H_GHZ_FF / C [fF]
E2_OVER_2H_GHZ_FF = E_CHARGE**2 / (2.0 * PLANCK_H) * 1e6

# hbar/(4e^2) in ps/fF: kinetic kernel K [ps] = KINETIC_PS_PER_FF * C [fF]
KINETIC_PS_PER_FF = HBAR / (4.0 * E_CHARGE**2) * 1e-3

TWO_PI = 2.0 * math.pi


def charging_energy_ghz(c_ff: float) -> float:
    """Charging energy e^2/(2C) in h*GHz for a capacitance in fF."""
    return E2_OVER_2H_GHZ_FF / c_ff


def capacitance_ff(ec_ghz: float) -> float:
    """Capacitance in fF with charging energy e^2/(2C) equal to ec_ghz."""
    return E2_OVER_2H_GHZ_FF / ec_ghz

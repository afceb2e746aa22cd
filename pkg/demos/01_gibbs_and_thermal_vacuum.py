"""Gibbs state of a qubit and its thermal vacuum in the doubled space.

Run with ``python demos/01_gibbs_and_thermal_vacuum.py``.
"""

import math

import numpy as np

from rigtfd import liouville, tfd

# A two-level system with gap 1 at beta = ln 2: weights 1 and 1/2.
h = np.diag([0.0, 1.0])
state = tfd.gibbs(h, math.log(2.0))
print("Z =", state.partition)
print("rho =\n", state.rho.matrix.real)

# The vacuum is vec(sqrt(rho)): sqrt(2/3)|00> + sqrt(1/3)|11>.
vac = tfd.thermal_vacuum(state)
print("vacuum components:", np.round(vac.state.components.real, 10))

# Tracing out the tilde factor gives rho back (purification).
print("partial trace == rho:", np.allclose(liouville.partial_trace_tilde(vac.state), state.rho.matrix))

# Thermal averages agree between Tr(rho A) and <0|A (x) I|0>.
sz = np.diag([1.0, -1.0])
print("<sigma_z> operator route:", tfd.thermal_average_operator(sz, state))
print("<sigma_z> doubled route: ", tfd.thermal_average_tfd(sz, vac))

# Low temperature drives the excited population to zero without overflow.
cold = tfd.gibbs(h, 50.0)
print("excited population at beta = 50:", cold.rho.matrix[1, 1].real)

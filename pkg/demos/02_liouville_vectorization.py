"""Operators as vectors: the trace inner product and superoperators.

Run with ``python demos/02_liouville_vectorization.py``.
"""

import numpy as np

from rigtfd import liouville, tfd

rng = np.random.default_rng(0)
d = 3
a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
b = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))

# Row-major vectorization is unitary: it preserves Tr(A^dagger B).
print("Tr(A^dag B)      :", liouville.hs_inner(a, b))
print("<vec A, vec B>   :", liouville.vectorize(a).inner(liouville.vectorize(b)))
# Putting the conjugation on the other slot gives the complex conjugate instead.
print("swapped slots    :", liouville.vectorize_swapped(a).inner(liouville.vectorize_swapped(b)))

# Rank-one operators x -> <phi, x> psi map to psi (x) conj(phi).
phi, psi = rng.normal(size=d) + 0j, rng.normal(size=d) + 1j
print("rank-one check   :", np.allclose(liouville.vectorize(liouville.rank_one(phi, psi)).components,
                                         np.kron(psi, np.conj(phi))))

# The physical sector acts on the left, the tilde sector on the right.
x = rng.normal(size=(d, d)) + 0j
vx = liouville.vectorize(x).components
print("A (x) I   gives A X     :", np.allclose(liouville.devectorize(tfd.doubled_observable(a, d) @ vx), a @ x))
print("I (x) ~A  gives X A^dag :", np.allclose(liouville.devectorize(tfd.tilde_observable(a, d) @ vx), x @ a.conj().T))

# The commutator superoperator has the Bohr frequencies E_i - E_j as spectrum.
h = np.diag([0.0, 1.0, 2.5])
print("commutator spectrum:", np.sort(liouville.commutator_super(h).spectrum().real))

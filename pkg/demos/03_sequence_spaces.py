"""Decay classes of coefficient sequences: test space, Hilbert space, dual.

Run with ``python demos/03_sequence_spaces.py``.
"""

import numpy as np

from rigtfd import rigged
from rigtfd.rigged import DecayProfile, SequenceVector

profiles = {
    "2^-n": DecayProfile.geometric(0.5),
    "(1+n)^-1": DecayProfile.power(-1.0),
    "constant": DecayProfile.power(0.0),
    "(1+n)^2": DecayProfile.power(2.0),
    "2^n": DecayProfile.geometric(2.0),
    "0.5^sqrt(1+n)": DecayProfile.stretched(0.5, 0.5),
}
for name, p in profiles.items():
    norms = [rigged.profile_seminorm(p, k) for k in (0, 2, 8)]
    print(f"{name:>14}: {rigged.classify(p).value:<12} p_0, p_2, p_8 = {norms}")

# Pairing a polynomially growing functional with a rapidly decreasing vector.
f = SequenceVector.from_profile(DecayProfile.power(2.0), 64)
v = SequenceVector.from_profile(DecayProfile.geometric(0.5), 64)
res = rigged.pair(f, v)
print("pair value", res.value, "tail bound", res.tail_bound, "converged", res.converged)

# Products of sequences laid out on a single index via the Cantor pairing.
t = rigged.tensor_profile(DecayProfile.geometric(0.5), DecayProfile.geometric(0.5))
print("tensor profile:", t, "->", rigged.classify(t).value)

# Unitaries move coefficients but the decay class comes along unchanged.
q, _ = np.linalg.qr(np.random.default_rng(1).normal(size=(64, 64)))
w = rigged.transport(q, v)
print("transported class:", w.decay_class.value, "seminorm p_3:", w.seminorm(3))

"""Operators on the doubled space as sequences with certified decay.

Run with ``python demos/04_operator_sequences.py``.
"""

import numpy as np

from rigtfd import liouville, rigged, tfd

d = 4
phi = 0.5 ** np.arange(d)
psi = (1 / 3) ** np.arange(d)
op = np.outer(phi, psi)

# The product of two geometric profiles bounds every matrix entry.
profile = rigged.tensor_profile(rigged.DecayProfile.geometric(0.5), rigged.DecayProfile.geometric(1 / 3))
image = tfd.lambda_map(op, profile)
print("profile:", profile)
print("class of the image:", image.decay_class.value)
print("same vector as row-major vectorization:",
      np.array_equal(image.vector.components, liouville.vectorize(op).components))

back, cls = tfd.lambda_inverse(image)
print("round trip exact:", np.array_equal(back, op), "class:", cls.value)

# Pairings on the doubled space match the trace inner product.
x = np.eye(d) / 2
px = tfd.lambda_map(x, rigged.DecayProfile.finite(d * d))
print("<op, x> trace  :", liouville.hs_inner(op, x))
print("<op, x> doubled:", image.vector.inner(px.vector))

"""
Transfer fidelity over time
===========================

Sample |U(t)_{1,n}|^2 on a grid, then search for the first time the
fidelity crosses 0.99.
"""

import numpy as np

from pgst import build_path, decompose, fidelity_trace, find_peak, laplacian_matrix
from pgst import n3_probability, phase_at_peak

# n = 3: the closed form never exceeds 3/4
D3 = decompose(laplacian_matrix(build_path(3)))
tr = fidelity_trace(D3, 1, 3, 0.0, 200.0, 10**5)
t = np.linspace(0.0, 200.0, 10**5)
print("max probability:", tr.probabilities.max())
print("max |trace - closed form|:", np.abs(tr.probabilities - n3_probability(t)).max())

# n = 2: perfect transfer at pi/2
D2 = decompose(laplacian_matrix(build_path(2)))
print("P_2 at pi/2:", fidelity_trace(D2, 1, 2, np.pi / 2, np.pi, 2).probabilities[0])

# powers of two get arbitrarily close; other lengths stall
for n in (4, 5, 6, 7, 8):
    D = decompose(laplacian_matrix(build_path(n)))
    pk = find_peak(D, 1, n, 0.99)
    phase = phase_at_peak(D, 1, n, pk)
    print(f"n={n}: found={pk.found} tau={pk.tau:.4f} fidelity={pk.fidelity:.6f} "
          f"phase={phase:+.4f} horizon={pk.horizon:.0f}")

"""
Spectrum and sign patterns of a Heisenberg chain
================================================

Decompose the Laplacian of a short chain, look at which eigenvalues each
vertex sees, and compare the signs of the projections at mirror vertices.
"""

import numpy as np

from pgst import build_path, decompose, laplacian_matrix, strong_cospectrality
from pgst.spectral import path_laplacian_eigenvalues

n = 6
G = build_path(n)
D = decompose(laplacian_matrix(G))

# numerical eigenvalues against 2 - 2 cos(pi r / n)
print("eigenvalues:", np.round(D.eigenvalues, 6))
print("max deviation from closed form:",
      np.abs(D.eigenvalues - path_laplacian_eigenvalues(n)).max())

# the projectors resolve the identity
print("sum of projectors == I:", np.allclose(D.projectors.sum(axis=0), np.eye(n)))

# mirror pairs share a sign pattern that alternates with the eigenvalue index
for j in range(1, n // 2 + 1):
    sp = strong_cospectrality(D, j, n + 1 - j)
    print(f"pair ({j}, {n + 1 - j}): support {sp.support} sigma {sp.sigma}")

# a non-mirror pair is not even cospectral
print("pair (1, 2):", strong_cospectrality(D, 1, 2))

"""The composition operator C_Phi as a truncated matrix.

Shows the exact coefficients of n^{-Phi}, the operator's matrix on the
weighted orthonormal basis, its Gram matrix, and the isometry defect
||G - I||: zero exactly for vertical translations, bounded away from zero
for everything else in the gallery.
"""

import numpy as np

import dirspaces as d
from dirspaces import symbol

mu = d.AlphaMeasure(0.0)

# coefficients of 2^{-Phi} for Phi(s) = s + (1/2) 2^{-s}: supported on 2, 4, 8, ...
sym = symbol(1, {2: 0.5})
g = d.compose_basis(sym, 2, 32)
nz = np.nonzero(g.coeffs)[0] + 1
print("support of 2^{-Phi}:", list(nz))
print("leading coefficients:", np.round(g.coeffs[nz[:4] - 1], 6))

# matrix and Gram of the dilation symbol
m = d.operator_matrix(symbol(2, {}), mu, 8)
print("\ndilation 2s at N = 8: columns", m.ns)
G = d.gram(m)
print("Gram diagonal:", np.round(np.real(np.diag(G)), 6))

print("\nisometry defect ||G - I||_2 at N = 64, alpha(0):")
for label, s in [
    ("s + 10i", symbol(1, 10j)),
    ("s + 1", symbol(1, 1.0)),
    ("2s", symbol(2, {})),
    ("s + 1 + (1/2) 2^-s", symbol(1, {1: 1.0, 2: 0.5})),
]:
    rep = d.isometry_defect(s, mu, 64, require_admissible=False)
    print(f"  {label:22s} defect = {rep.value:.3e}   "
          f"(N/2 value {rep.value_half:.3e}, delta {rep.stabilization_delta:.1e})")

b = d.contraction_lower_bound(symbol(0, 1.0), mu, 256, require_admissible=False)
print(f"\nfinite-section norm bound for the constant symbol 1: {b:.4f} > 1 "
      "(not a contraction)")

"""The four connected components of the Lorentz group, by their signs."""

import numpy as np

from emconf import Lorentz, LorentzClass, induced_matrix

eta = np.diag([1.0, -1.0, -1.0, -1.0])
params = dict(boost=(0.3, -0.1, 0.2), rotation=(0.5, 0.2, -0.4))

for cls in LorentzClass:
    L = induced_matrix(Lorentz(lorentz_class=cls, **params))
    orth = np.max(np.abs(L.T @ eta @ L - eta))
    print(cls.value)
    print(f"  det = {np.linalg.det(L):+.6f}   sign(L[0,0]) = {np.sign(L[0,0]):+.0f}"
          f"   |L^T eta L - eta| = {orth:.2e}")

print()
print("Same generator in all four: the improper classes negate the spatial")
print("part, the antichronous classes run time backwards, and every one of")
print("them preserves the metric exactly.")

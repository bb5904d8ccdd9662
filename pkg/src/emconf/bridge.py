"""Dictionary between Cl(1,3) and the paravector algebra Cl(3).

The even subalgebra of Cl(1,3) is carried onto Cl(3) blade by blade:
timelike bivectors e_0 e_i map to -x_i (the physical blades e_i e_0 map to
+x_i), spatial bivectors map to the imaginary units, the scalar stays put and
the four-blade supplies the imaginary scalar.  Odd elements ride along after
right multiplication by e_0, which is why a four-vector x lands on the real
paravector t + r and e_0 x on its conjugate.
"""

from __future__ import annotations

import numpy as np

from .cl13 import Faraday13, FourVector, Multivector13, geometric_product
from .cl3 import Faraday3, Paravector3, cl3_product
from .errors import GradeLeakageError

# Mask indices of the even subalgebra channels.
_SCALAR, _PSEUDO = 0, 15
_T1, _T2, _T3 = 3, 5, 9        # e0e1, e0e2, e0e3
_S12, _S13, _S23 = 6, 10, 12   # e1e2, e1e3, e2e3


def even_to_cl3(m: Multivector13, tol: float = 1e-12) -> Paravector3:
    """Map an even multivector into Cl(3); rejects odd-grade residue."""
    c = m.c
    odd = float(np.max(np.abs(c[np.array([1, 2, 4, 8, 7, 11, 13, 14])])))
    if odd > tol * max(1.0, m.max_abs()):
        raise GradeLeakageError(f"odd-grade residue {odd:.3e} in even-subalgebra map")
    s = complex(c[_SCALAR], c[_PSEUDO])
    v = np.array(
        [
            complex(-c[_T1], -c[_S23]),
            complex(-c[_T2], c[_S13]),
            complex(-c[_T3], -c[_S12]),
        ]
    )
    return Paravector3(s, v)


def to_paravector(v: FourVector) -> Paravector3:
    """Four-vector to real paravector t + r (the image of v e_0)."""
    return Paravector3.from_event(v.t, (v.x, v.y, v.z))


def to_paravector_bar(v: FourVector) -> Paravector3:
    """The image of e_0 v: the conjugate paravector t - r."""
    return Paravector3.from_event(v.t, (-v.x, -v.y, -v.z))


def to_faraday3(F: Faraday13) -> Faraday3:
    """Field bivector to field vector; (E, B) carry over unchanged."""
    return Faraday3(F.E, F.B)


def product_correspondence_check(x: FourVector, y: FourVector) -> float:
    """Max-abs deviation between the images of x y and the product x bar(y)."""
    lhs = even_to_cl3(geometric_product(x.to_mv(), y.to_mv()))
    rhs = cl3_product(to_paravector(x), to_paravector_bar(y))
    diff = lhs - rhs
    return diff.max_abs()


def sandwich_correspondence_check(
    x: FourVector, F: Faraday13, y: FourVector
) -> float:
    """Max-abs deviation between the images of x F y and -x F* bar(y)."""
    raw = geometric_product(
        geometric_product(x.to_mv(), F.to_mv()), y.to_mv()
    )
    lhs = even_to_cl3(raw)
    fstar = to_faraday3(F).to_paravector().star()
    rhs = -cl3_product(cl3_product(to_paravector(x), fstar), to_paravector_bar(y))
    diff = lhs - rhs
    return diff.max_abs()

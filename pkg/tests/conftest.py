"""Shared fixtures: the three reference models.

M0: rotation with balanced loss/gain noise (conjugate base eigenvalues).
M1: squeezing-matched noise, no rotation (real base eigenvalues).
M2: as M1 with the rotation tuned onto the degeneracy (defective drift).
All three have the faithful thermal invariant state with beta = log 2.
"""

import numpy as np
import pytest

from gqms.model import GaussianModel

SQRT2 = np.sqrt(2.0)

M0 = GaussianModel(omega=1.0, kappa=0j, zeta=0j, kraus=((SQRT2, 0.0), (0.0, 1.0)))
M1 = GaussianModel(omega=0.0, kappa=1j * SQRT2 / 3, zeta=0j, kraus=((SQRT2, 1.0),))
M2 = GaussianModel(omega=SQRT2 / 3, kappa=1j * SQRT2 / 3, zeta=0j, kraus=((SQRT2, 1.0),))

REFERENCE_MODELS = {"M0": M0, "M1": M1, "M2": M2}


@pytest.fixture(scope="session")
def m0():
    return M0


@pytest.fixture(scope="session")
def m1():
    return M1


@pytest.fixture(scope="session")
def m2():
    return M2


@pytest.fixture(params=sorted(REFERENCE_MODELS), scope="session")
def any_model(request):
    return REFERENCE_MODELS[request.param]

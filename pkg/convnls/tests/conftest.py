"""Configuration file for pytest for convnls."""

import os
import shutil

import pytest

from convnls.spectral import Kernel, make_admissible_kernel
from convnls.spectral.fields import random_fields
from convnls.hamiltonian import (HamiltonianSystem, ZeroDensity, LinearDensity,
                                 GrossPitaevskiiDensity)
from convnls.flow import FlowSpec
from convnls.floer import continue_in_T
from convnls.utils.rng import get_rng
from convnls.tests.settings import (K_SMALL, K_GP, DELTA, COUPLING, POTENTIAL, PAIR_COEFF,
                                    GP_AMPLITUDE,
                                    N_S, N_T, MARGIN, SCHEDULE,
                                    BASE_TEST_FILE_PATH, TEST_PLOTS_PATH)

###################################################################################################
###################################################################################################

@pytest.fixture(scope='session', autouse=True)
def check_dir():
    """Once, prior to session, this will clear and re-initialize the test file directories."""

    # If the directories already exist, clear them
    if os.path.exists(BASE_TEST_FILE_PATH):
        shutil.rmtree(BASE_TEST_FILE_PATH)

    # Remake (empty) directories
    os.mkdir(BASE_TEST_FILE_PATH)
    os.mkdir(TEST_PLOTS_PATH)


@pytest.fixture(scope='module')
def rng():

    yield get_rng(42)


@pytest.fixture(scope='module')
def psi_small():

    yield make_admissible_kernel(DELTA, K_SMALL)


@pytest.fixture(scope='module')
def psi_pair():
    """Kernel with psi(1) = psi(-1) = c and no other coefficients."""

    yield Kernel([PAIR_COEFF, 0., PAIR_COEFF])


@pytest.fixture(scope='module')
def system_free(psi_small):

    yield HamiltonianSystem(psi_small, ZeroDensity(), K_SMALL)


@pytest.fixture(scope='module')
def system_pair(psi_pair):
    """Time-independent system with a closed form Hofer norm 2 pi^2 c^2."""

    yield HamiltonianSystem(psi_pair, LinearDensity(1.), 1)


@pytest.fixture(scope='module')
def system_gp():

    psi = make_admissible_kernel(DELTA, K_GP, amplitude=GP_AMPLITUDE)

    yield HamiltonianSystem(psi, GrossPitaevskiiDensity(COUPLING, POTENTIAL), K_GP)


@pytest.fixture(scope='module')
def flow_spec_gp(system_gp):

    yield FlowSpec(system_gp, dt=1/200)


@pytest.fixture(scope='module')
def state_free(system_free):

    yield continue_in_T(system_free, 1, SCHEDULE, n_s=N_S, n_t=N_T, margin=MARGIN, hofer=0.)


@pytest.fixture(scope='module')
def state_gp(system_gp):

    yield continue_in_T(system_gp, 1, SCHEDULE, n_s=N_S, n_t=N_T, margin=MARGIN, hofer=0.)


@pytest.fixture(scope='module')
def unit_fields(rng):

    yield random_fields(rng, K_GP, 20)

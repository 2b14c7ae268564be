"""Settings for convnls tests."""

import os

###################################################################################################
###################################################################################################

# Settings for test systems
K_SMALL = 3
K_GP = 4
DELTA = 0.5
COUPLING = 0.05
POTENTIAL = 0.05
PAIR_COEFF = 0.1
GP_AMPLITUDE = 0.2

# Settings for test strips
N_S = 24
N_T = 8
MARGIN = 2.
SCHEDULE = [0., 0.5, 1.]

# Path Settings
BASE_TEST_FILE_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'test_files')
TEST_PLOTS_PATH = os.path.join(BASE_TEST_FILE_PATH, 'plots')

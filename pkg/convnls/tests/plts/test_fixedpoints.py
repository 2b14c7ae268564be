"""Tests for plts.fixedpoints."""

import numpy as np

from convnls.spectral.fields import basis_field
from convnls.fixedpoint.records import FixedPointRecord
from convnls.fixedpoint.catalog import label_and_separate
from convnls.spectral.kernels import Kernel
from convnls.tests.tutils import plot_test
from convnls.tests.settings import TEST_PLOTS_PATH

from convnls.plts.fixedpoints import *

###################################################################################################
###################################################################################################

@plot_test
def test_plot_catalog():

    records = [FixedPointRecord(basis_field(mode, 3), 0., np.exp(1j * mode ** 2), n=mode,
                                action_slice=mode ** 2 / 2) for mode in range(4)]

    psi = Kernel([0., 0., 0.1, 0., 0.1, 0., 0.], delta=0.5)
    _, df_catalog = label_and_separate(records, psi=psi)

    plot_catalog(df_catalog, save_fig=True, file_name='test_plot_catalog',
                 file_path=TEST_PLOTS_PATH)

    plot_catalog(df_catalog, show_free=False)

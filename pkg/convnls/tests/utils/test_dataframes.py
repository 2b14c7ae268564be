"""Tests for utils.dataframes."""

import os

import numpy as np
import pandas as pd

from convnls.utils.dataframes import *
from convnls.tests.settings import BASE_TEST_FILE_PATH

###################################################################################################
###################################################################################################

def test_write_csv():

    df = pd.DataFrame({'T': [0., 0.5], 'residual': [1 / 3, np.pi]})
    path = os.path.join(BASE_TEST_FILE_PATH, 'test_frame.csv')

    write_csv(df, path)
    df_loaded = pd.read_csv(path, float_precision='round_trip')

    assert list(df_loaded.columns) == ['T', 'residual']
    assert np.array_equal(df_loaded['residual'].values, df['residual'].values)


def test_limit_df():

    df = pd.DataFrame({'T': np.arange(6.), 'energy': np.arange(6.) ** 2})

    df_lim = limit_df(df, 'T', 1, 3)
    assert df_lim['T'].tolist() == [1., 2., 3.]
    assert df_lim.index[0] == 0

    df_lim = limit_df(df, 'T', start=4, reset_indices=False)
    assert df_lim.index.tolist() == [4, 5]

    assert len(limit_df(df, 'T')) == len(df)

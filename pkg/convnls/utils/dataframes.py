"""Utility functions for working with convnls DataFrames."""

import numpy as np

###################################################################################################
###################################################################################################

FLOAT_FORMAT = '%.17g'


def write_csv(df, path):
    """Write a dataframe to CSV with round-trip float precision.

    Parameters
    ----------
    df : pandas.DataFrame
        Table to write.
    path : str
        Output path.

    Notes
    -----
    Floats are written with 17 significant digits, so equal runs give byte-identical files.
    """

    df.to_csv(path, index=False, float_format=FLOAT_FORMAT)


def limit_df(df, column, start=None, stop=None, reset_indices=True):
    """Restrict a dataframe to rows whose column lies within limits.

    Parameters
    ----------
    df : pandas.DataFrame
        Table, such as a continuation log or an action profile.
    column : str
        Column to limit on, for example 'T' or 's'.
    start, stop : float, optional
        Inclusive lower and upper limits.
    reset_indices : bool, optional, default: True
        Whether to renumber the rows of the result from zero.

    Returns
    -------
    df : pandas.DataFrame
        Limited table.

    Examples
    --------
    Keep the part of an action profile inside the support of the cut-off:

    >>> import pandas as pd
    >>> df = pd.DataFrame({'s': [-2., -1., 0., 1., 2.], 'action': [0.5, 0.5, 0.6, 0.5, 0.5]})
    >>> limit_df(df, 's', -1, 1)['s'].tolist()
    [-1.0, 0.0, 1.0]
    """

    values = df[column].values

    keep = np.ones(len(df), dtype=bool)
    if start is not None:
        keep &= values >= start
    if stop is not None:
        keep &= values <= stop

    df = df[keep]

    return df.reset_index(drop=True) if reset_indices else df

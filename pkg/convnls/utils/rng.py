"""Seeded, stream-split random number generation."""

import numpy as np

###################################################################################################
###################################################################################################

def get_rng(seed, stream=0):
    """Return an independent random generator for one stream of a seeded run.

    Parameters
    ----------
    seed : int
        Run seed, taken from the configuration.
    stream : int, optional, default: 0
        Index of the stream. Distinct streams are statistically independent and do not
        depend on the number of draws made from other streams.

    Returns
    -------
    rng : numpy.random.Generator
        Philox-backed generator.

    Examples
    --------
    >>> rng = get_rng(42, stream=1)
    >>> draw = rng.standard_normal()
    """

    if stream < 0:
        raise ValueError('Stream indices must be non-negative.')

    return np.random.Generator(np.random.Philox(key=int(seed)).jumped(int(stream)))

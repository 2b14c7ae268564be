"""Progress tracking for batched computations."""

import logging
from importlib import import_module

###################################################################################################
###################################################################################################

logger = logging.getLogger(__name__)

TQDM_OPTIONS = ['tqdm', 'tqdm.notebook']


def progress_bar(iterable, progress, n_to_run, desc='Running convnls jobs'):
    """Add a progress bar to an iterable to be processed.

    Parameters
    ----------
    iterable : list or iterable
        Iterable object to potentially apply progress tracking to.
    progress : {None, 'tqdm', 'tqdm.notebook'}
        Which kind of progress bar to use. If None, no progress bar is used.
    n_to_run : int
        Number of jobs to complete.
    desc : str, optional
        Display text of the progress bar.

    Returns
    -------
    pbar : iterable or tqdm object
        Iterable object, with tqdm progress functionality, if requested.

    Raises
    ------
    ValueError
        If the input for `progress` is not understood.

    Notes
    -----
    ``tqdm`` must be installed separately from convnls. The explicit `n_to_run` input is
    required as tqdm requires it when the iterable is a parallel mapping.

    Examples
    --------
    Track the refinement of several fixed point candidates:

    >>> from multiprocessing import Pool
    >>> mapping = Pool(1).imap(abs, [-1, -2, -3])
    >>> values = list(progress_bar(mapping, progress=None, n_to_run=3))
    """

    if progress is not None and progress not in TQDM_OPTIONS:
        raise ValueError("Progress bar option not understood.")

    if not progress:
        return iterable

    try:
        tqdm = import_module(progress)
        pbar = tqdm.tqdm(iterable, desc=desc, total=n_to_run, dynamic_ncols=True)

    except ImportError:
        logger.warning("A progress bar requiring the 'tqdm' module was requested, but 'tqdm' "
                       "is not installed. Proceeding without a progress bar.")
        pbar = iterable

    return pbar

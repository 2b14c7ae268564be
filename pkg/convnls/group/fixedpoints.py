"""Compute fixed points across several asymptotic modes."""

import logging
from functools import partial
from multiprocessing import Pool, cpu_count

from convnls.utils.progress import progress_bar
from convnls.hamiltonian.hofer import hofer_norm
from convnls.floer.continuation import continue_in_T
from convnls.fixedpoint.extract import extract_candidate
from convnls.fixedpoint.newton import refine_newton
from convnls.fixedpoint.catalog import label_and_separate

###################################################################################################
###################################################################################################

logger = logging.getLogger(__name__)


def compute_fixed_points(flow_spec, modes, schedule, continuation_kwargs=None,
                         newton_kwargs=None, orientation=-1, n_jobs=-1, progress=None):
    """Continue strips, extract candidates and refine fixed points for several modes.

    Parameters
    ----------
    flow_spec : FlowSpec
        Integration settings; its system defines the Hamiltonian.
    modes : list of int
        Asymptotic modes to seed strips from.
    schedule : list of float
        Values 0 = T_0 < ... < T_max of the cut-off parameter.
    continuation_kwargs : dict, optional
        Keyword arguments of :func:`~.continue_in_T`. Passing 'hofer' avoids recomputing the
        Hofer norm estimate for every mode.
    newton_kwargs : dict, optional
        Keyword arguments of :func:`~.refine_newton`.
    orientation : {-1, 1}, optional, default: -1
        Orientation of the symplectic area term of the action.
    n_jobs : int, optional, default: -1
        The number of modes to process in parallel. -1 uses all cores.
    progress : {None, 'tqdm', 'tqdm.notebook'}
        Specify whether to display a progress bar. Uses 'tqdm', if installed.

    Returns
    -------
    records : list of FixedPointRecord
        Records sorted by action, with catalog flags.
    df_catalog : pandas.DataFrame
        Catalog table, in the same order.
    states : list of ContinuationState
        Final continuation states, in the order of modes.

    Notes
    -----
    Each mode is processed independently, so sequential and parallel runs give equal results.
    """

    n_jobs = cpu_count() if n_jobs == -1 else n_jobs

    # One Hofer norm estimate serves every mode
    continuation_kwargs = dict(continuation_kwargs or {})
    if continuation_kwargs.get('hofer') is None:
        hofer_kwargs = continuation_kwargs.pop('hofer_kwargs', None) or {}
        continuation_kwargs['hofer'] = hofer_norm(flow_spec.system, 'G', **hofer_kwargs).value

    pipeline = partial(_run_mode, flow_spec=flow_spec, schedule=schedule,
                       continuation_kwargs=continuation_kwargs,
                       newton_kwargs=newton_kwargs or {}, orientation=orientation)

    if n_jobs == 1:
        outputs = list(progress_bar(map(pipeline, modes), progress, len(modes),
                                    desc='Computing fixed points'))
    else:
        with Pool(processes=n_jobs) as pool:
            outputs = list(progress_bar(pool.imap(pipeline, modes), progress, len(modes),
                                        desc='Computing fixed points'))

    records = [output[0] for output in outputs]
    states = [output[1] for output in outputs]

    records, df_catalog = label_and_separate(records, psi=flow_spec.system.psi)

    return records, df_catalog, states


def _run_mode(n, flow_spec, schedule, continuation_kwargs, newton_kwargs, orientation):
    """Continuation, extraction and refinement for a single mode."""

    state = continue_in_T(flow_spec.system, n, schedule, orientation=orientation,
                          **continuation_kwargs)

    candidate, info = extract_candidate(state, orientation, return_slice=True)

    record = refine_newton(flow_spec, candidate, n=n, action_slice=info['action'],
                           T_source=info['T'], **newton_kwargs)

    logger.info('Mode %d: fixed point with residual %.3g, action %.6g, displacement %.3g',
                n, record.residual, record.action, record.displacement)

    return record, state

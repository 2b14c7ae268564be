"""Command line interface: convnls {simulate, hofer, strip, fixedpoints, verify}."""

import sys
import logging
import argparse

from convnls.version import __version__
from convnls.utils.errors import ConfigError, SnapshotError, NumericalError
from convnls.cli.config import load_config
from convnls.cli.experiments import run_experiment
from convnls.cli.verify import run_verify

###################################################################################################
###################################################################################################

logger = logging.getLogger('convnls')

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _grid(text):
    """Parse a strip grid given as NsxNt."""

    try:
        n_s, n_t = (int(val) for val in text.lower().split('x'))
    except ValueError:
        raise argparse.ArgumentTypeError('Grid must be given as NsxNt, e.g. 200x32.')

    return n_s, n_t


def _modes(text):
    """Parse a comma separated list of modes."""

    try:
        return [int(val) for val in text.split(',') if val.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('Modes must be comma separated integers, e.g. 5,6,7.')


def build_parser():
    """Argument parser with one subcommand per experiment."""

    parser = argparse.ArgumentParser(
        prog='convnls', description='Fixed points of convolution-type NLS on the circle.')

    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('--config', help='JSON file of flat dotted configuration keys.')
    parser.add_argument('--out', help='Output directory.')
    parser.add_argument('--seed', type=int, help='Seed of every stochastic choice.')
    parser.add_argument('--threads', type=int, help='Parallel jobs, -1 for all cores.')

    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true', help='Log at DEBUG level.')
    verbosity.add_argument('--quiet', action='store_true', help='Only log warnings.')

    subparsers = parser.add_subparsers(dest='command', required=True)

    sim = subparsers.add_parser('simulate', help='Integrate the flow and record observables.')
    sim.add_argument('--modes', type=int, help='Mode cut-off k.')
    sim.add_argument('--dt', type=float, help='Integrator step.')
    sim.add_argument('--t1', type=float, help='Final time.')
    sim.add_argument('--state-in', help='Initial field JSON. Defaults to u0 at strip.mode.')
    sim.add_argument('--state-out', help='Final field JSON.')
    sim.add_argument('--observables', help='Observables CSV.')

    hof = subparsers.add_parser('hofer', help='Estimate the Hofer norm.')
    hof.add_argument('--nodes', type=int, help='Gauss-Legendre nodes in t.')
    hof.add_argument('--starts', type=int, help='Random multistarts per node.')
    hof.add_argument('--which', choices=['F', 'G'], help='Hamiltonian to estimate.')
    hof.add_argument('--gap', type=int, metavar='L', help='Also estimate the gap to cut-off L.')

    strip = subparsers.add_parser('strip', help='Continue a strip in T.')
    strip.add_argument('--mode', type=int, help='Asymptotic mode n.')
    strip.add_argument('--T-max', type=float, dest='T_max', help='Final cut-off parameter.')
    strip.add_argument('--steps', type=int, help='Number of schedule increments.')
    strip.add_argument('--grid', type=_grid, help='Strip grid NsxNt.')
    strip.add_argument('--tol', type=float, help='Residual tolerance.')
    strip.add_argument('--snapshot-dir', help='Directory of strip snapshots.')
    strip.add_argument('--resume', help='Snapshot to resume from.')

    fps = subparsers.add_parser('fixedpoints', help='Catalog fixed points over modes.')
    fps.add_argument('--modes-list', type=_modes, help='Comma separated modes.')
    fps.add_argument('--T-max', type=float, dest='T_max', help='Final cut-off parameter.')
    fps.add_argument('--out', dest='catalog', help='Catalog JSON path.')

    ver = subparsers.add_parser('verify', help='Run the property suite.')
    ver.add_argument('--snapshot', action='append', dest='snapshots',
                     help='Snapshot to validate and resume from; may be repeated.')

    return parser


def _overrides(args):
    """Configuration keys set on the command line."""

    overrides = {'out': args.out, 'seed': args.seed, 'threads': args.threads}

    if args.command == 'simulate':
        overrides.update({'k': args.modes, 'flow.dt': args.dt, 'flow.t1': args.t1})

    elif args.command == 'hofer':
        overrides.update({'hofer.nodes': args.nodes, 'hofer.starts': args.starts,
                          'hofer.which': args.which, 'hofer.gap': args.gap})

    elif args.command == 'strip':
        overrides.update({'strip.mode': args.mode, 'strip.T_max': args.T_max,
                          'strip.steps': args.steps, 'strip.tol': args.tol})
        if args.grid is not None:
            overrides.update({'strip.n_s': args.grid[0], 'strip.n_t': args.grid[1]})

    elif args.command == 'fixedpoints':
        overrides.update({'fixedpoints.modes': args.modes_list, 'strip.T_max': args.T_max})

    return overrides


def _options(args):
    """Experiment specific paths."""

    if args.command == 'simulate':
        return {'state_in': args.state_in, 'state_out': args.state_out,
                'observables': args.observables}

    if args.command == 'strip':
        return {'resume': args.resume, 'snapshot_dir': args.snapshot_dir}

    if args.command == 'fixedpoints':
        return {'catalog': args.catalog}

    return {}


def configure_logging(verbose=False, quiet=False):

    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO

    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s'))

    logger.handlers = [handler]
    logger.setLevel(level)


def main(argv=None):
    """Run the command line interface and return its exit code.

    Exit codes are 0 on success, 1 if a verify check failed, 2 for usage, configuration or
    snapshot errors and 3 for numerical failures.
    """

    parser = build_parser()
    args = parser.parse_args(argv)

    configure_logging(args.verbose, args.quiet)

    try:
        config = load_config(args.config, _overrides(args))

        if args.command == 'verify':
            report = run_verify(config, snapshots=args.snapshots)
            return EXIT_OK if report['passed'] else EXIT_CHECK_FAILED

        run_experiment(config, args.command, **_options(args))

    except (ConfigError, SnapshotError) as err:
        logger.error('%s', err)
        return EXIT_USAGE

    except NumericalError as err:
        logger.error('%s: %s', type(err).__name__, err)
        return EXIT_NUMERICAL

    except ValueError as err:
        logger.error('Invalid input: %s', err)
        return EXIT_USAGE

    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())

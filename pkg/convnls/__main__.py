"""Run the command line interface with python -m convnls."""

import sys

from convnls.cli.main import main

sys.exit(main())

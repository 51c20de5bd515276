"""Run the :mod:`dualcat` command line interface."""

import sys

from dualcat.cli import main

sys.exit(main())

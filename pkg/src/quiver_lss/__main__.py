"""Allow running as ``python -m quiver_lss``."""

import sys

from quiver_lss.cli import main

sys.exit(main())

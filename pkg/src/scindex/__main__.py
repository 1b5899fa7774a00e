"""Allow ``python -m scindex``."""

import sys

from .cli import main

sys.exit(main())

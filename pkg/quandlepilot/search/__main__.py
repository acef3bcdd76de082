import sys

from .start_cli import main

sys.exit(main())

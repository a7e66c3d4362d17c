import sys

from autfix.cli import main

sys.exit(main())

import sys

from pinnacles.cli import main

sys.exit(main())

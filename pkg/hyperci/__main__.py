import sys

from hyperci.cli import main

sys.exit(main())

import sys

from osctab.cli import main

sys.exit(main())

import sys

from radoreg.cli import main

sys.exit(main())

import sys

from yangian.cli import main

sys.exit(main())

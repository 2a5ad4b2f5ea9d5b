import sys

from ngsmells.cli import main

sys.exit(main())

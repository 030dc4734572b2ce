import sys

from projschub.cli import main

sys.exit(main())

import sys

from hilbnum.cli import main

sys.exit(main())

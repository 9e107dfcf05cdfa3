import sys

from wheelturan.cli import main

sys.exit(main())

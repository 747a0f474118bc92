import sys

from compactlab.cli.main import main

sys.exit(main())

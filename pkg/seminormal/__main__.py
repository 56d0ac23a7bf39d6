import sys

from seminormal.cli.main import main

sys.exit(main())

"""`python -m mirlib` runs the mirror command line."""

from mirlib.cli.main import main

raise SystemExit(main())

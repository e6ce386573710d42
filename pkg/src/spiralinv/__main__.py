from .cli_io.cli import main

raise SystemExit(main())

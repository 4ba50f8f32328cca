from arrowribbon.cli import main

raise SystemExit(main())

from beamsym.cli.main import main

raise SystemExit(main())

from fnlab.cli import main

raise SystemExit(main())

from steinhaus.cli import main

raise SystemExit(main())

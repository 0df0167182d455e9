import lqmatch.cli

lqmatch.cli.main()

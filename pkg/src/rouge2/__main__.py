from rouge2.cli import main

main()

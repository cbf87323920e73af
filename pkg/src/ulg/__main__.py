from ulg.cli import main

main()

from multieuler.cli import main

main()

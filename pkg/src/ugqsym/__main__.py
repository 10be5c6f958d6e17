from ugqsym.cli import main

main()

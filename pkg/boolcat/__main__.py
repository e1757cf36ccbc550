from boolcat.main import main

main()

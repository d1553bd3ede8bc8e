import sys

from src.utils.cli import main

if __name__ == "__main__":
    sys.exit(main())

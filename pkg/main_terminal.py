import sys

import dotenv

from pysmooth.boot.cli import main

if __name__ == "__main__":
    dotenv.load_dotenv()
    sys.exit(main())

"""
Startup script for the dscones command line.
Same as `python -m dscones.main`.
"""
import sys

from dscones.main import main

if __name__ == "__main__":
    sys.exit(main())

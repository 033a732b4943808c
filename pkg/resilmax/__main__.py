# resilmax/__main__.py
"""
Main Entrypoint into the module
"""

import sys

from resilmax.cli import main

if __name__ == "__main__":
    sys.exit(main())

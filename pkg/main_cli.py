"""
padyn - Command Line Launcher
Runs the CLI from a source checkout without installing the package
"""

import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from padyn.cli.app import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())

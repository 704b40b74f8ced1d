import sys
from pathlib import Path

# Add src directory to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from procompletion.presentation.cli.app import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())

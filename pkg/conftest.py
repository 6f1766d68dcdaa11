"""
pytest configuration and shared fixtures.

Author: Disintegrator Team
Date: 2026-10-17
"""

import pytest
import logging
import sys
from pathlib import Path

# Add package root to path
sys.path.insert(0, str(Path(__file__).parent))

# Configure logging for tests
logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)


@pytest.fixture
def spec_dir(tmp_path):
    """Provide a scratch directory for measure-spec files."""
    path = tmp_path / "specs"
    path.mkdir()
    return path


@pytest.fixture(autouse=True)
def reset_singletons():
    """Reset singleton instances between tests."""
    from disintegrator.shared.config import reset_config
    reset_config()
    yield
    reset_config()


@pytest.fixture(autouse=True)
def restore_root_logger():
    """Undo handlers installed by configure_logging."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)

from __future__ import annotations

from kahlerbochner._version import __version__

__all__ = ["__version__"]

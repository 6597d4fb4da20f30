"""HTTP service wrapping the library; see :mod:`deltamon.service.app`."""

from .app import create_app

__all__ = ["create_app"]

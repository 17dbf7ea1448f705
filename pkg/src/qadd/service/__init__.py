"""HTTP service wrapping the core package; the CLI shares its handlers."""

from .app import app, create_app

__all__ = ["app", "create_app"]

"""HTTP service wrapping the solver and simulator with an in-memory store."""

from .app import create_app

__all__ = ["create_app"]

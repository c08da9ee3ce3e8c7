"""
API package for FastAPI routes.
"""

from .routes import router, verify_router

__all__ = ["router", "verify_router"]

"""
FastAPI entrypoint for padic-hyper.
"""

from __future__ import annotations

import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from padic_hyper.api.routes import router, verify_router
from padic_hyper.config import get_settings
from padic_hyper.service import ComputeService


def create_app() -> FastAPI:
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level), format="[%(asctime)s] %(levelname)s %(name)s: %(message)s"
    )
    service = ComputeService(settings)

    app = FastAPI(title="padic-hyper", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.include_router(router)
    app.include_router(verify_router)
    app.state.settings = settings
    app.state.service = service
    return app


app = create_app()

"""
Logging and OpenTelemetry setup.

Logging uses one process-wide format. Tracing goes through the OpenTelemetry
API everywhere; an SDK provider with a console exporter is installed only
when EHRLAB_TRACING=console, otherwise spans are no-ops.
"""
from __future__ import annotations

import logging

from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import ConsoleSpanExporter, SimpleSpanProcessor

from .config import Settings

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

_tracing_configured = False


def configure_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format=LOG_FORMAT)


def configure_tracing(settings: Settings) -> None:
    """Install a console-exporting tracer provider if requested (once per process)."""
    global _tracing_configured
    if _tracing_configured or settings.tracing != "console":
        return
    provider = TracerProvider(resource=Resource.create({"service.name": "ehrlab"}))
    provider.add_span_processor(SimpleSpanProcessor(ConsoleSpanExporter()))
    trace.set_tracer_provider(provider)
    _tracing_configured = True
    logger.info("OpenTelemetry console tracing enabled")


def get_tracer(name: str) -> trace.Tracer:
    return trace.get_tracer(name)

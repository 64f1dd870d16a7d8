"""HTTP facade and persistence for pipeline runs, trials, and evaluations."""

from .app import ENV_DATA_DIR, ENV_PORT, create_app, serve
from .jobs import JobExecutor, parse_overrides, serialize_report
from .store import DocumentStore

__all__ = [
    "DocumentStore",
    "ENV_DATA_DIR",
    "ENV_PORT",
    "JobExecutor",
    "create_app",
    "parse_overrides",
    "serialize_report",
    "serve",
]

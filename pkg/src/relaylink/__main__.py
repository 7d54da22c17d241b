"""Allow ``python -m relaylink``."""

from .cli.main import run

run()

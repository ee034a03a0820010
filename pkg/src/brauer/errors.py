"""Error type shared by all modules.

Every failure carries a short machine-readable token (for example
``order-incomplete`` or ``no-canonical-map``) so the CLI and tests can match on it.
"""
from __future__ import annotations


class BrauerError(ValueError):
    def __init__(self, token: str, message: str = ""):
        self.token = token
        self.message = message
        super().__init__(f"{token}: {message}" if message else token)

# Lemma/status.py
import sys

from .config import cfg

_callback = None


def set_callback(fn):
    global _callback
    _callback = fn


def update(message):
    if _callback:
        _callback(message)
    if not cfg.quiet:
        print(f"\r{message}", end="", file=sys.stderr, flush=True)


def done():
    if not cfg.quiet:
        print(file=sys.stderr, flush=True)

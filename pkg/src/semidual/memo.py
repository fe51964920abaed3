"""
Per-object memoization for immutable algebraic values.

Results are stored on the instance itself, so they live exactly as long as
the value they describe. Access is serialized by one re-entrant lock; the
computation runs outside it and the first stored result wins.
"""

import threading
from functools import wraps

_LOCK = threading.RLock()


def cached(owner, key, factory):
    """Return owner's cached value for `key`, computing it with `factory()` once."""
    with _LOCK:
        memo = owner.__dict__.setdefault("_memo", {})
        if key in memo:
            return memo[key]
    value = factory()
    with _LOCK:
        return owner.__dict__["_memo"].setdefault(key, value)


def cached_values(owner, prefix) -> list:
    """Every cached (key, value) pair whose key starts with `prefix`."""
    with _LOCK:
        memo = owner.__dict__.get("_memo", {})
        return [(k, v) for k, v in memo.items() if isinstance(k, tuple) and k[:1] == (prefix,)]


def memoized(method):
    """Cache a method of an immutable object by its positional arguments."""

    @wraps(method)
    def wrapper(self, *args):
        return cached(self, (method.__name__, args), lambda: method(self, *args))

    return wrapper

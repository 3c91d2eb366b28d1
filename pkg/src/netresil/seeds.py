"""Deterministic child-seed derivation for seeded procedures."""

from __future__ import annotations

import hashlib


def derive_seed(master: int, *scope: object) -> int:
    """Derive a child seed from ``master`` plus a label path.

    The derivation is a hash, so it is stable across runs, platforms and
    Python versions, and independent of the order in which children are
    requested.  Labels are stringified, so any hashable breadcrumb works:
    ``derive_seed(7, "trial", 12)``.
    """
    payload = repr((int(master),) + tuple(str(part) for part in scope)).encode()
    digest = hashlib.sha256(payload).digest()
    return int.from_bytes(digest[:8], "big") >> 1

"""Shared, cached catalog builds: constructors are pure, so tests reuse them."""

from functools import lru_cache

from hopfkit import catalog


@lru_cache(maxsize=None)
def _build(name, items):
    # constructor-time verification is skipped here because the acceptance
    # suite runs verify_hopf explicitly on every catalog member
    return catalog.build_family(name, dict(items), verify=False)


def build(name, **params):
    """Cached (HopfAlgebraData, CandidateData) for a family."""
    return _build(name, tuple(sorted(params.items())))

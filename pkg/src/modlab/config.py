"""Size limits and shared tuning knobs.

All values are per-object bounds, not global budgets.  Operations that
enumerate (endomorphism rings, hom sets, free-module lattices) raise
:class:`~modlab.errors.SizeLimitExceeded` instead of silently truncating.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    max_ring: int = 4096
    max_module: int = 4096
    max_end: int = 65536
    # |R|**k bound when solving for relation modules of a k-generator module.
    max_relation_space: int = 1 << 20
    # Endomorphism rings up to this size get their literal right-ideal
    # lattice; larger ones use the equivalent image-join-closure route.
    max_ideal_lattice: int = 1024


DEFAULT_LIMITS = Limits()

# Addition tables are precomputed for modules up to this many elements;
# larger modules fall back to coordinate arithmetic.
ADD_TABLE_MAX = 1024

CACHE_ENV_VAR = "MODLAB_CACHE"

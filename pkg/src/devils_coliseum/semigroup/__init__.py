"""Generator systems, trapping regions and word-tree searches."""

from devils_coliseum.semigroup.preimage import preimage_disjointness, preimage_mask
from devils_coliseum.semigroup.search import khat_membership, postcritical_sample
from devils_coliseum.semigroup.system import (
    PRESETS,
    build_system,
    coliseum_system,
    permute_system,
)
from devils_coliseum.semigroup.trap import (
    certify_image_containment,
    certify_trap,
    mask_inside_interior,
)
from devils_coliseum.semigroup.types import (
    Disjointness,
    Disk,
    GeneratorSystem,
    TrapCertificate,
    TrapFailure,
    TrapRegion,
)

__all__ = [
    "PRESETS",
    "Disjointness",
    "Disk",
    "GeneratorSystem",
    "TrapCertificate",
    "TrapFailure",
    "TrapRegion",
    "build_system",
    "certify_image_containment",
    "certify_trap",
    "coliseum_system",
    "khat_membership",
    "mask_inside_interior",
    "permute_system",
    "postcritical_sample",
    "preimage_disjointness",
    "preimage_mask",
]

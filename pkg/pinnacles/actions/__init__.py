from .foata_strehl import (
    CLASSICAL,
    DUAL,
    ClassicalFoataStrehlAction,
    DualFoataStrehlAction,
    classical_fs,
    classical_fs_set,
    classical_orbit,
    dual_fs,
    dual_fs_set,
    dual_orbit,
    iter_orbit,
    orbit_expand,
    orbit_partition,
    orbit_size,
)

__all__ = [
    "CLASSICAL",
    "DUAL",
    "ClassicalFoataStrehlAction",
    "DualFoataStrehlAction",
    "classical_fs",
    "classical_fs_set",
    "classical_orbit",
    "dual_fs",
    "dual_fs_set",
    "dual_orbit",
    "iter_orbit",
    "orbit_expand",
    "orbit_partition",
    "orbit_size",
]

"""Set families of integers, their simplicial complexes and exact homology."""

from ._settop import (
    GuardExceeded,
    alt_sum,
    coprime_free_collapsed,
    count_table,
    face_complex,
    family_names,
    homology,
    is_member,
    maximal_members,
    nerve,
    partition,
    reduced_homology,
    run_cli,
    scan_h2,
    smith_normal_form,
    strong_collapse,
)

__all__ = [
    "GuardExceeded",
    "alt_sum",
    "coprime_free_collapsed",
    "count_table",
    "face_complex",
    "family_names",
    "homology",
    "is_member",
    "maximal_members",
    "nerve",
    "partition",
    "reduced_homology",
    "run_cli",
    "scan_h2",
    "smith_normal_form",
    "strong_collapse",
]

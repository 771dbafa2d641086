from .family import Family, Realization, all_realizations, build_family, build_R, family_of_digraph, realize_family, realizes
from .ordering import (
    ASCENDING,
    DESCENDING,
    EMPTY,
    FULL,
    OrderingCertificate,
    OrderingFailure,
    check_neighborhood_ordering,
)
from .pipeline import (
    PartitionFailure,
    ThresholdRepresentation,
    build_F,
    certificate_variants,
    classes_to_partition,
    run_certificate,
    synthesize_h,
    test_partition,
)
from .recognize import Width2Result, difference_bipartition, is_difference, is_threshold, recognize_width2, threshold_split
from .width import WidthResult, homogeneous_partitions, is_h_threshold, threshold_width

__all__ = [
    "ASCENDING",
    "DESCENDING",
    "EMPTY",
    "FULL",
    "Family",
    "OrderingCertificate",
    "OrderingFailure",
    "PartitionFailure",
    "Realization",
    "ThresholdRepresentation",
    "Width2Result",
    "WidthResult",
    "all_realizations",
    "build_F",
    "build_R",
    "build_family",
    "certificate_variants",
    "check_neighborhood_ordering",
    "classes_to_partition",
    "difference_bipartition",
    "family_of_digraph",
    "homogeneous_partitions",
    "is_difference",
    "is_h_threshold",
    "is_threshold",
    "realize_family",
    "realizes",
    "recognize_width2",
    "run_certificate",
    "synthesize_h",
    "test_partition",
    "threshold_split",
    "threshold_width",
]

"""Exact computations in extended affine Weyl groups.

Twisted conjugacy, straight elements, Newton and Kottwitz invariants, the
sigma-fixed subgroup and window-level verifiers for the classification of
straight twisted classes.
"""

from .affine import AffineElement, AffineWeylGroup, ResourceCapExceeded
from .conjugacy import (MinDecomposition, ReductionStep, StraightClassRecord, approx_connected,
                        descend_to_min, is_straight, level_component, min_decomposition,
                        reduction_neighbors, straight_classes_in_window, validate_decomposition)
from .fixed import (AffineAction, FixedApartment, FixedSubgroupData, RelativeClassifier,
                    build_fixed_subgroup, fixed_apartment, relative_newton, sigma_affine_action)
from .invariants import (ClassInvariant, Classifier, CoinvariantGroup, dominant_newton, kottwitz,
                         newton_point, pi)
from .report import VerificationReport
from .rootdata import RootDatum, RootDatumError, build_root_datum, dominant_representative, finite_weyl_act
from .twist import (GammaSubgroup, Twist, TwistError, build_twist, cyclic_subgroups, identity_twist,
                    twist_from_affine_permutation, twisted_conjugate)
from .verifiers import (verify_bijection, verify_classification, verify_gamma, verify_injection,
                        verify_length_add, verify_min1, verify_min2, verify_partial)

__version__ = "0.1.0"

__all__ = [
    "AffineAction", "AffineElement", "AffineWeylGroup", "ClassInvariant", "Classifier", "CoinvariantGroup",
    "FixedApartment", "FixedSubgroupData", "GammaSubgroup", "MinDecomposition", "ReductionStep",
    "RelativeClassifier", "ResourceCapExceeded", "RootDatum", "RootDatumError", "StraightClassRecord", "Twist",
    "TwistError", "VerificationReport", "approx_connected", "build_fixed_subgroup", "build_root_datum",
    "build_twist", "cyclic_subgroups", "descend_to_min", "dominant_newton", "dominant_representative",
    "finite_weyl_act", "fixed_apartment", "identity_twist", "is_straight", "kottwitz", "level_component",
    "min_decomposition", "newton_point", "pi", "reduction_neighbors", "relative_newton",
    "sigma_affine_action", "straight_classes_in_window", "twist_from_affine_permutation",
    "twisted_conjugate", "validate_decomposition", "verify_bijection", "verify_classification",
    "verify_gamma", "verify_injection", "verify_length_add", "verify_min1", "verify_min2", "verify_partial",
]

"""Bijections, statistics and exhaustive checks for families counted by 4^(n-1)."""

from .bijections import (
    CHAIN,
    HeightLabeledPath,
    MarkedBridge,
    MarkedPeakPath,
    TwoColoredBridge,
    bridge_to_marked_peak,
    bridge_to_meander,
    chain,
    colored_to_pair,
    height_labeled_to_marked_bridge,
    marked_bridge_to_height_labeled,
    marked_bridge_to_two_colored,
    marked_peak_to_bridge,
    meander_to_bridge,
    pair_to_colored,
    pair_to_walk,
    two_colored_to_marked_bridge,
    two_colored_to_walk,
    walk_to_pair,
    walk_to_two_colored,
)
from .compositions import CompositionPair, enumerate_3compositions, enumerate_compositions, from_bits, to_bits
from .errors import FourPowError
from .paths import (
    DOWN,
    UP,
    PathClass,
    Peak,
    Step,
    altitudes,
    crossings,
    decompose_at_peak,
    enumerate_paths,
    first_return_after,
    is_in_class,
    peaks,
    rank,
    reflect,
    signed_crossing_count,
    strict_ltr_maxima,
    unrank,
)
from .verification import (
    VerificationReport,
    closed_form_count,
    d_r_count,
    oeis_compare,
    verify_congruence,
    verify_suite,
)

__version__ = "0.1.0"

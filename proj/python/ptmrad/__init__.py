"""Mod-p digit-sum sequences, sign-weight transforms, and exact identity checks."""

from ._core import (
    DEFAULT_SIZE_CAP,
    MAX_MODULUS,
    CoefficientVector,
    ExponentShiftReport,
    PartitionBlocks,
    ProuhetSum,
    PtmSequence,
    SidelobeMomentRecord,
    SidelobeReport,
    __version__,
    base_digits,
    bit_length,
    block_index,
    classic_prefix,
    classic_v,
    classic_w,
    digit_sum_mod,
    exponent,
    exponent_shift_check,
    moment_sum,
    prouhet_sum,
    ptm_partition,
    ptm_term,
    rademacher_coeffs,
    rademacher_phi,
    reconstruct,
    recurrence_table,
    sidelobe_moments,
    sidelobe_term,
    walsh_project,
    walsh_sum,
    walsh_sum_half_range,
    walsh_weight,
    weight,
    weight_recursive,
    weight_table,
    weight_vector,
    xor_bitsum,
    xor_shift,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

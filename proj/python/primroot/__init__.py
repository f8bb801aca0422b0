"""Certified evaluation and distributional analysis of the primitive-root
determinant density c(p) over prime fields."""

from ._primroot import (  # noqa: F401
    CapacityError,
    DomainError,
    bound_B,
    c_fixed_dimension,
    certify_c,
    charfun_sq,
    choose_depth,
    coarse_lower_bound,
    endpoint_constants,
    exact_atoms,
    factorize,
    is_prime,
    jump_weight,
    least_prime_in_progression,
    matrix_product,
    mellin,
    moment,
    overhead,
    prime_count,
    primorial,
    primorial_index,
    q_product,
    sample_truncated,
    scan_min_c,
    smooth_kernel_density,
    tail_mean,
    totient_ratio,
    wasserstein_bound,
    witness,
)
from ._primroot import __version__  # noqa: F401

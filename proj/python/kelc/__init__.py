"""Linear complexity and k-error linear complexity of 2^n-periodic binary sequences."""

try:
    from ._kelc import *  # noqa: F401,F403
    from ._kelc import KelcError, Sequence
except ImportError:  # in-tree build: the extension sits next to the package
    from _kelc import *  # type: ignore  # noqa: F401,F403
    from _kelc import KelcError, Sequence  # type: ignore

__all__ = [
    "KelcError",
    "Sequence",
    "classify",
    "decompose",
    "f_mult",
    "full_table",
    "g_mult",
    "h_mult",
    "k_error_complexity",
    "kmin",
    "linear_complexity",
    "n4_count",
    "n5_count",
    "p_mult",
    "profile",
    "q_mult",
    "rueppel_count",
    "sample_with_lc",
    "spectrum",
    "verify_counts",
    "weight8_count",
    "weight_census",
]

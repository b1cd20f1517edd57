from src.oracle.randers import (
    RandersAdapted,
    BlockEntries,
    randers_g_closed,
    randers_ginv_closed,
    randers_cartan_closed,
    randers_w_closed,
    randers_s_closed,
    block_matrix,
    adapt_randers,
)
from src.oracle.finite_diff import fd_scurvature

__all__ = [
    "RandersAdapted",
    "BlockEntries",
    "randers_g_closed",
    "randers_ginv_closed",
    "randers_cartan_closed",
    "randers_w_closed",
    "randers_s_closed",
    "block_matrix",
    "adapt_randers",
    "fd_scurvature",
]

from tenj.statesum.engine import (
    StateSumOptions,
    StateSumResult,
    compute,
    gauge_transform_test,
    normalization,
    state_sum,
    state_sum_reduced,
    ten_j_action,
)
from tenj.statesum.oracle import flat_connection_count, untwisted_dw_value
from tenj.statesum.states import State, count_states, enumerate_states

__all__ = [
    "State",
    "StateSumOptions",
    "StateSumResult",
    "compute",
    "count_states",
    "enumerate_states",
    "flat_connection_count",
    "gauge_transform_test",
    "normalization",
    "state_sum",
    "state_sum_reduced",
    "ten_j_action",
    "untwisted_dw_value",
]

"""Shared hypothesis strategies for the exact-arithmetic layers."""
from hypothesis import strategies as st

from icosian.goldnum import Gold
from icosian.quat import Quat

golds = st.builds(
    Gold,
    st.integers(min_value=-60, max_value=60),
    st.integers(min_value=-60, max_value=60),
    st.integers(min_value=-12, max_value=12).filter(lambda d: d != 0),
)

nonzero_golds = golds.filter(bool)

quats = st.builds(Quat, golds, golds, golds, golds)

nonzero_quats = quats.filter(lambda q: bool(q.norm2()))

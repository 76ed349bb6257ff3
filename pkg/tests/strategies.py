from hypothesis import strategies as st

from app.partitions import Partition

MAX_PART = 7
MAX_LENGTH = 7

e_values = st.integers(min_value=2, max_value=6)

partitions = st.lists(
    st.integers(min_value=1, max_value=MAX_PART), max_size=MAX_LENGTH
).map(lambda parts: Partition(tuple(sorted(parts, reverse=True))))

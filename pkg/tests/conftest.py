from hypothesis import strategies as st

from partition_lab.partition import from_unordered

partitions = st.lists(st.integers(min_value=1, max_value=12), max_size=12).map(from_unordered)

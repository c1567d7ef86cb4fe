from __future__ import annotations

from hypothesis import strategies as st


@st.composite
def partitions_st(draw, max_size: int = 5):
    parts = draw(st.lists(st.integers(1, max_size), max_size=max_size))
    return tuple(sorted(parts, reverse=True))


@st.composite
def multipartitions_st(draw, a: int | None = None, max_size: int = 4):
    level = a if a is not None else draw(st.integers(1, 4))
    return tuple(draw(partitions_st(max_size)) for _ in range(level))

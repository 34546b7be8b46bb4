"""Shared hypothesis strategies for duel instances."""

from fractions import Fraction

from hypothesis import strategies as st

from skirmish import Instance

# Small pool so repeated speeds actually happen; the open range keeps
# denominators tame enough for exact arithmetic to stay fast.
_POOL = tuple(
    Fraction(n, d) for n in (1, 2, 3, 5, 7, 30) for d in (1, 2, 3)
)

speeds = st.one_of(
    st.sampled_from(_POOL),
    st.fractions(min_value=Fraction(1, 12), max_value=Fraction(40), max_denominator=12),
)


def speed_lists(min_size=0, max_size=5):
    return st.lists(speeds, min_size=min_size, max_size=max_size)


@st.composite
def instances(draw, min_side=1, max_side=5):
    """Random valid instances, both sides non-empty by default."""
    a = draw(speed_lists(min_side, max_side))
    b = draw(speed_lists(min_side, max_side))
    if not a and not b:
        a = [draw(speeds)]
    return Instance(tuple(a), tuple(b))

from fractions import Fraction

from hypothesis import strategies as st

# small positive rationals keep exact arithmetic fast in property tests
pos_fraction = st.builds(Fraction,
                         st.integers(min_value=1, max_value=60),
                         st.integers(min_value=1, max_value=60))


def gc_coords(n):
    return st.lists(pos_fraction, min_size=2 * n - 1, max_size=2 * n - 1)

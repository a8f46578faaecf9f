import math

from hypothesis import strategies as st

HALF_PI = 0.5 * math.pi

# interiors of the parameter domains, away from the degenerate ends
half_angles = st.floats(min_value=0.02, max_value=HALF_PI - 0.02)
lengths = st.floats(min_value=0.05, max_value=12.0)
short_lengths = st.floats(min_value=0.05, max_value=4.0)

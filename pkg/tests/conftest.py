from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def rationals(lo=-50, hi=50, max_den=60):
    return st.builds(lambda n, d: Fraction(n, d),
                     st.integers(lo * max_den, hi * max_den), st.integers(1, max_den))


def unit_rationals(max_den=10_000):
    """Rationals in the open interval (0, 1)."""
    return st.integers(2, max_den).flatmap(
        lambda d: st.integers(1, d - 1).map(lambda n: Fraction(n, d)))

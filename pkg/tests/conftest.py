import os

import mpmath
from hypothesis import settings


settings.register_profile('dev', max_examples=200, deadline=None)
settings.register_profile('acceptance', max_examples=10000, deadline=None)
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'dev'))


def pytest_sessionstart(session):
    mpmath.mp.dps = 30  # 30 significant digits

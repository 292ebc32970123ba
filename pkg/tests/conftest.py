from functools import lru_cache

from hypothesis import HealthCheck, settings

from qhol import catalog
from qhol.holomorph import build_hol
from qhol.quasi import families

settings.register_profile("qhol", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qhol")


@lru_cache(maxsize=None)
def hol(spec):
    return build_hol(catalog.build(spec))


@lru_cache(maxsize=None)
def fams(spec):
    return families(hol(spec))


# groups cheap enough for exhaustive property checks
SMALL = ["C:2", "C:4", "AB:2x2", "D:3", "C:6", "C:8", "AB:4x2", "AB:2x2x2", "D:4", "DIC:2",
         "C:9", "AB:3x3", "D:5", "C:12", "D:6", "DIC:3", "A4"]

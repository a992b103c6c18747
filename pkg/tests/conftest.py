import numpy as np
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("default")

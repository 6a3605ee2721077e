from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SMALL_GROUPS = ("trivial", "C2", "C3", "C4", "V4", "S3", "C6", "D8", "Q8", "A4")

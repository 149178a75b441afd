"""Shared pytest configuration."""

from hypothesis import HealthCheck, settings

# Property tests must be reproducible run to run.
settings.register_profile(
    "negtrans",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("negtrans")

import hypothesis
from hypothesis import HealthCheck

hypothesis.settings.register_profile(
    "ci",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
    max_examples=50,
)
hypothesis.settings.load_profile("ci")

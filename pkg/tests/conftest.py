import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def roots100():
    """Refined u-roots at n=100, shared across the expensive end-to-end tests."""
    from eulerian_roots import polynomials

    return polynomials.refined_u_roots(100)

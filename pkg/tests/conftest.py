import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "wavekit",
    max_examples=200,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "wavekit"))

# outcomes of the property suite, read back by the acceptance run
SUITE_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "suite: member of the reported property suite")


def pytest_collection_modifyitems(config, items):
    # the acceptance file summarises the others, so it runs last
    items.sort(key=lambda it: it.fspath.basename == "test_acceptance.py")


def pytest_runtest_makereport(item, call):
    if call.when == "call" and item.get_closest_marker("suite"):
        SUITE_RESULTS[item.name] = (call.excinfo is None, call.duration)

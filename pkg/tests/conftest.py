import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qfueter.linmap import random_basis, random_map, random_regular_map
from qfueter.quaternion import Quaternion

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

coord = st.floats(-3.0, 3.0, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, coord, coord, coord, coord)
nonzero_quaternions = quaternions.filter(lambda q: q.norm() > 1e-3)
seeds = st.integers(0, 2**32 - 1)
rngs = seeds.map(np.random.default_rng)


@st.composite
def units(draw):
    v = draw(st.tuples(coord, coord, coord).filter(lambda t: np.linalg.norm(t) > 1e-2))
    v = np.array(v) / np.linalg.norm(v)
    return Quaternion(0.0, *v)


bases = st.builds(random_basis, rngs, st.sampled_from(["positive", "negative"]))
positive_bases = st.builds(random_basis, rngs)
maps = st.builds(random_map, rngs)
regular_maps = st.builds(lambda rng, z: random_regular_map(rng, zero_slots=z), rngs,
                         st.sampled_from([(), (), (3,), (2, 3), (1, 2, 3)]))


# acceptance reporting: tests marked criterion(id, text) get one summary line each

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    cid, text = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        ok = rep.outcome == "passed" and not hasattr(rep, "wasxfail")
        prev = _RESULTS.get(cid)
        _RESULTS[cid] = (text, ok if prev is None else prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    def key(cid):
        return [(0, int(p), "") if p.isdigit() else (1, 0, p) for p in cid.replace("*", ".*").split(".")]

    for cid in sorted(_RESULTS, key=key):
        text, ok = _RESULTS[cid]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid:6s} {text}")

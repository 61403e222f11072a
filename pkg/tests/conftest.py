import re
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from weakyd.corpus import builtin  # noqa: E402
from weakyd.groupoid_factory import full_groupoid, group_algebra, groupoid_algebra  # noqa: E402
from weakyd.projections_entwining import build_projected_module, trivial_projection  # noqa: E402
from weakyd.yetter_drinfeld import base_object  # noqa: E402
from weakyd.adjoint_actions import adjoint_yd_modules, build_adjoint  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def rg():
    return groupoid_algebra(full_groupoid(2))


@pytest.fixture(scope="session")
def z2():
    return group_algebra(2)


@pytest.fixture(scope="session")
def z3():
    return group_algebra(3)


@pytest.fixture(scope="session")
def dl(rg):
    return base_object(rg)


@pytest.fixture(scope="session")
def adjoint_rg(rg):
    return build_adjoint(rg)


@pytest.fixture(scope="session")
def omega_modules(adjoint_rg):
    return adjoint_yd_modules(adjoint_rg)


@pytest.fixture(scope="session")
def trivial_pm(rg):
    return build_projected_module(trivial_projection(rg))


@pytest.fixture(scope="session")
def product_instance():
    return builtin("projection_full2_z3")


@pytest.fixture(scope="session")
def product_pm(product_instance):
    return product_instance.projected


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", rep.nodeid)
            if m and rep.when == "call":
                title = m.group(2).replace("_", " ")
                lines.append((int(m.group(1)), f"{status[:4].upper()} criterion {m.group(1)}: "
                                               f"{title} ({rep.duration:.1f} s)"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)

import os
from fractions import Fraction

import pytest
import sympy
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

from galcovers.cas import CasMissing, resolve_cas
from galcovers.poly import Polynomial

X = sympy.Symbol("x")


def to_sympy(p: Polynomial, var=X):
    return sympy.Integer(0) + sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * var**i
               for i, c in enumerate(p.coeffs))


def from_sympy(expr, var=X) -> Polynomial:
    coeffs = sympy.Poly(expr, var).all_coeffs()[::-1]
    return Polynomial(Fraction(int(c.p), int(c.q)) for c in map(sympy.Rational, coeffs))


@pytest.fixture(scope="session")
def cas(tmp_path_factory):
    """The configured CAS, or skip."""
    if os.environ.get("GALCOVERS_SKIP_CAS"):
        pytest.skip("CAS tests disabled by GALCOVERS_SKIP_CAS")
    try:
        return resolve_cas(log_dir=tmp_path_factory.mktemp("cas-logs"))
    except CasMissing as e:
        pytest.skip(str(e))


# ---------------------------------------------------------------- acceptance report

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k, title): acceptance criterion k")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    k, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIPPED"}[rep.outcome]
        detail = ""
        if rep.skipped and isinstance(rep.longrepr, tuple):
            detail = rep.longrepr[2].removeprefix("Skipped: ")
        elif rep.failed:
            detail = str(rep.longrepr).strip().splitlines()[-1][:160]
        _CRITERIA[k] = (title, status, detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        title, status, detail = _CRITERIA[k]
        line = f"criterion {k:>2}: {status:<7} {title}"
        tr.write_line(line + (f"  ({detail})" if detail else ""))

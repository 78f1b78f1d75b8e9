import os
import stat
import subprocess
import sys

import pytest

from galcovers import cas as C
from galcovers.fieldlab import cas_classgroup, irreducible
from galcovers.poly import Polynomial


def fake_gp(tmp_path, body, name="fakegp"):
    path = tmp_path / name
    path.write_text("#!/bin/sh\ncat > /dev/null\n" + body + "\n")
    path.chmod(path.stat().st_mode | stat.S_IXUSR)
    return str(path)


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    for k in (C.ENV_CAS, C.ENV_CONFIG, C.ENV_LOGDIR):
        monkeypatch.delenv(k, raising=False)
    monkeypatch.setenv(C.ENV_CONFIG, str(tmp_path / "missing.ini"))
    return monkeypatch


def test_resolution_order(clean_env, tmp_path):
    a = fake_gp(tmp_path, "echo '[1]'", "a")
    e = fake_gp(tmp_path, "echo '[2]'", "e")
    c = fake_gp(tmp_path, "echo '[3]'", "c")
    ini = tmp_path / "conf.ini"
    ini.write_text(f"[cas]\npath = {c}\nlog_dir = {tmp_path / 'conflogs'}\ntimeout = 12\n")
    clean_env.setenv(C.ENV_CONFIG, str(ini))
    cfg = C.resolve_cas()
    assert cfg.source == "config" and cfg.argv == [c] and cfg.timeout == 12
    assert cfg.log_dir == tmp_path / "conflogs"
    clean_env.setenv(C.ENV_CAS, e)
    assert C.resolve_cas().source == "environment"
    cfg = C.resolve_cas(a, log_dir=tmp_path / "arglogs")
    assert cfg.source == "argument" and cfg.argv == [a] and cfg.log_dir == tmp_path / "arglogs"


def test_env_log_dir(clean_env, tmp_path):
    clean_env.setenv(C.ENV_LOGDIR, str(tmp_path / "envlogs"))
    cfg = C.resolve_cas(fake_gp(tmp_path, "echo '[]'"))
    assert cfg.log_dir == tmp_path / "envlogs"


def test_missing_binary(clean_env, tmp_path):
    with pytest.raises(C.CasMissing):
        C.resolve_cas(str(tmp_path / "nope"))
    clean_env.setenv(C.ENV_CAS, "/no/such/gp")
    with pytest.raises(C.CasMissing):
        C.resolve_cas()


def test_nothing_found(clean_env, monkeypatch):
    monkeypatch.setenv("PATH", "/nonexistent")
    with pytest.raises(C.CasMissing):
        C.resolve_cas(allow_shim=False)


def test_class_group_parse_and_transcript(clean_env, tmp_path):
    gp = fake_gp(tmp_path, "echo '[84, 42, 42, 42, 42, 6]'; echo '[2, 15, 4]'")
    cfg = C.resolve_cas(gp, log_dir=tmp_path / "logs")
    rep = cas_classgroup([1, 3, 24829767, 49659529, 24829767, 3, 1], cfg, n=42)
    assert rep.class_group_invariants == [84, 42, 42, 42, 42, 6]
    assert rep.computed_rank_n == 5 and rep.consistent
    assert rep.tool_version == "2.15.4" and rep.certified is False
    text = open(rep.transcript).read()
    assert "bnfinit" in text and "--- stdout" in text and "84, 42" in text


def test_parse_error(clean_env, tmp_path):
    cfg = C.resolve_cas(fake_gp(tmp_path, "echo 'garbage'"), log_dir=tmp_path)
    with pytest.raises(C.CasParseError):
        C.class_group([1, 1, 1], cfg)
    cfg = C.resolve_cas(fake_gp(tmp_path, "echo oops >&2; exit 3", "bad"), log_dir=tmp_path)
    with pytest.raises(C.CasParseError) as e:
        C.class_group([1, 1, 1], cfg)
    assert e.value.transcript is not None and "oops" in e.value.transcript.read_text()


def test_timeout(clean_env, tmp_path):
    cfg = C.resolve_cas(fake_gp(tmp_path, "sleep 5; echo '[]'"), log_dir=tmp_path, timeout=0.5)
    with pytest.raises(C.CasTimeout) as e:
        C.class_group([1, 1, 1], cfg)
    assert "TIMEOUT" in e.value.transcript.read_text()


def test_errors_are_distinct():
    assert issubclass(C.CasTimeout, C.CasError) and issubclass(C.CasParseError, C.CasError)
    assert not issubclass(C.CasTimeout, C.CasParseError)


def test_parse_int_list():
    assert C.parse_int_list("[]") == []
    assert C.parse_int_list(" [1, -2,3] ") == [1, -2, 3]
    with pytest.raises(C.CasParseError):
        C.parse_int_list("[1, x]")


def test_gp_poly():
    assert C.gp_poly([1, 0, 2]) == "Pol([2,0,1])"


def test_irreducible_falls_back_to_cas(clean_env, tmp_path):
    # D4 specializations have no degree-pattern certificate
    from galcovers.fieldlab import specialize
    from galcovers.selmer import admissible_ys
    y = next(admissible_ys("D4", 5, start=2))
    P = specialize("D4", y, 5, checks=False).poly
    yes = C.resolve_cas(fake_gp(tmp_path, "echo 1", "yes"), log_dir=tmp_path)
    assert irreducible(P, cas=yes).verdict == "yes"
    broken = C.resolve_cas(fake_gp(tmp_path, "exit 1", "broken"), log_dir=tmp_path)
    assert irreducible(P, cas=broken).verdict == "inconclusive"


# ---------------------------------------------------------------- real CAS

@pytest.mark.cas
def test_shim_version():
    pytest.importorskip("cypari2")
    out = subprocess.run([sys.executable, "-m", "galcovers.gpshim", "--version"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip().count(".") == 2


@pytest.mark.cas
def test_trivial_class_group(cas):
    rep = cas_classgroup(Polynomial([1, 1, 1]), cas, n=5)
    assert rep.class_group_invariants == [] and rep.computed_rank_n == 0


@pytest.mark.cas
def test_small_class_group(cas):
    # Q(sqrt(-5)) has class number 2; Q(sqrt(-23)) has 3
    assert cas_classgroup([5, 0, 1], cas).class_group_invariants == [2]
    assert cas_classgroup([6, 1, 1], cas, n=3).computed_rank_n == 1


@pytest.mark.cas
def test_cas_irreducibility(cas):
    assert C.is_irreducible([1, 0, 1], cas)
    assert not C.is_irreducible([-1, 0, 1], cas)

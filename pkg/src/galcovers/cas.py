"""Subprocess bridge to a PARI/GP compatible binary.

One process per query.  The query is a single line of GP fed on stdin;
the reply is read from stdout.  Every exchange is written to a transcript
file in the log directory.

The binary is located, in order, from: an explicit path, the
``GALCOVERS_CAS`` environment variable, the ``[cas] path`` entry of the
config file (``GALCOVERS_CONFIG`` or ``~/.config/galcovers/config.ini``),
``gp`` on PATH, and finally the bundled cypari2 shim.  Transcripts go to
``GALCOVERS_CAS_LOGDIR``, the ``[cas] log_dir`` entry, or
``~/.cache/galcovers/cas``.
"""

from __future__ import annotations

import configparser
import hashlib
import importlib.util
import os
import re
import shlex
import shutil
import subprocess
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

ENV_CAS = "GALCOVERS_CAS"
ENV_CONFIG = "GALCOVERS_CONFIG"
ENV_LOGDIR = "GALCOVERS_CAS_LOGDIR"
DEFAULT_CONFIG = Path("~/.config/galcovers/config.ini")
DEFAULT_TIMEOUT = 300.0
DEFAULT_STACK = "2G"


class CasError(RuntimeError):
    transcript: Path | None = None

    def __init__(self, msg: str, transcript: Path | None = None):
        self.transcript = transcript
        if transcript is not None:
            msg = f"{msg} (transcript: {transcript})"
        super().__init__(msg)


class CasMissing(CasError):
    pass


class CasTimeout(CasError):
    pass


class CasParseError(CasError):
    pass


@dataclass
class CasConfig:
    argv: list[str]
    source: str
    log_dir: Path | None = None
    timeout: float = DEFAULT_TIMEOUT
    stack: str = DEFAULT_STACK

    @property
    def is_shim(self) -> bool:
        return self.source == "shim"


def default_log_dir() -> Path:
    return Path(os.environ.get("XDG_CACHE_HOME", "~/.cache")).expanduser() / "galcovers" / "cas"


def _read_config(path: Path | None = None) -> dict:
    path = path or Path(os.environ.get(ENV_CONFIG, DEFAULT_CONFIG)).expanduser()
    if not path.is_file():
        return {}
    cp = configparser.ConfigParser()
    cp.read(path)
    return dict(cp["cas"]) if cp.has_section("cas") else {}


def resolve_cas(path: str | None = None, log_dir: str | os.PathLike | None = None,
                timeout: float | None = None, config_file: Path | None = None,
                allow_shim: bool = True) -> CasConfig:
    """Locate the CAS; raises ``CasMissing`` when nothing usable is found."""
    conf = _read_config(config_file)
    log = log_dir or os.environ.get(ENV_LOGDIR) or conf.get("log_dir") or default_log_dir()
    tmo = timeout or float(conf.get("timeout", DEFAULT_TIMEOUT))
    stack = conf.get("stack", DEFAULT_STACK)

    def make(cmd: str, source: str) -> CasConfig:
        argv = shlex.split(cmd)
        exe = shutil.which(argv[0]) if argv else None
        if exe is None:
            raise CasMissing(f"CAS binary {cmd!r} (from {source}) not found or not executable")
        return CasConfig([exe] + argv[1:], source, Path(log) if log else None, tmo, stack)

    if path:
        return make(path, "argument")
    if os.environ.get(ENV_CAS):
        return make(os.environ[ENV_CAS], "environment")
    if conf.get("path"):
        return make(conf["path"], "config")
    if shutil.which("gp"):
        return make("gp", "PATH")
    if allow_shim and importlib.util.find_spec("cypari2") is not None:
        return CasConfig([sys.executable, "-m", "galcovers.gpshim"], "shim",
                         Path(log) if log else None, tmo, stack)
    raise CasMissing(f"no CAS found: set {ENV_CAS}, pass --cas-path, or install gp or cypari2")


def _write_transcript(cfg: CasConfig, script: str, out: str, err: str, rc, elapsed: float) -> Path | None:
    if cfg.log_dir is None:
        return None
    cfg.log_dir.mkdir(parents=True, exist_ok=True)
    key = hashlib.sha1(script.encode()).hexdigest()[:16]
    path = cfg.log_dir / f"gp-{key}.log"
    path.write_text(
        f"# argv: {shlex.join(cfg.argv)}\n# returncode: {rc}\n# elapsed: {elapsed:.2f}s\n"
        f"--- stdin\n{script}\n--- stdout\n{out}--- stderr\n{err}"
    )
    return path


def run_gp(script: str, cfg: CasConfig, timeout: float | None = None) -> str:
    """Run one GP script and return its stdout."""
    argv = cfg.argv + ["-q", "-f", "-D", f"parisizemax={cfg.stack}"]
    tmo = timeout or cfg.timeout
    t0 = time.monotonic()
    try:
        proc = subprocess.run(argv, input=script + "\n", capture_output=True, text=True, timeout=tmo)
    except subprocess.TimeoutExpired as e:
        out = e.stdout.decode() if isinstance(e.stdout, bytes) else (e.stdout or "")
        tr = _write_transcript(cfg, script, out, "TIMEOUT\n", None, time.monotonic() - t0)
        raise CasTimeout(f"CAS did not answer within {tmo:g}s", tr) from None
    except OSError as e:
        raise CasMissing(f"cannot start {argv[0]}: {e}") from None
    tr = _write_transcript(cfg, script, proc.stdout, proc.stderr, proc.returncode, time.monotonic() - t0)
    if proc.returncode != 0:
        raise CasParseError(f"CAS exited with status {proc.returncode}: {proc.stderr.strip()[-300:]}", tr)
    return proc.stdout


_LIST = re.compile(r"^\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]$")


def parse_int_list(line: str) -> list[int]:
    m = _LIST.match(line.strip())
    if not m:
        raise CasParseError(f"expected a bracketed integer list, got {line.strip()[:80]!r}")
    return [int(v) for v in m.group(1).split(",")] if m.group(1) else []


def gp_poly(coeffs) -> str:
    """GP expression for the polynomial with constant-first ``coeffs``."""
    return "Pol([" + ",".join(str(int(c)) for c in reversed(list(coeffs))) + "])"


@dataclass
class ClassGroupReply:
    cyc: list[int]
    version: str
    certified: bool
    transcript: Path | None = None
    raw: str = field(default="", repr=False)


def class_group(coeffs, cfg: CasConfig, rigor: bool = False, timeout: float | None = None) -> ClassGroupReply:
    """Elementary divisors of the class group of Q[x]/(P)."""
    parts = [f"K = bnfinit(polredbest({gp_poly(coeffs)}), 1)", "print(K.cyc)"]
    if rigor:
        parts.append("print(bnfcertify(K))")
    parts.append('print(Vec(version()))')
    script = "; ".join(parts)
    out = run_gp(script, cfg, timeout)
    lines = [ln for ln in out.splitlines() if ln.strip().startswith("[") or ln.strip() in ("0", "1")]
    try:
        cyc = parse_int_list(lines[0])
        certified = False
        if rigor:
            certified = lines[1].strip() == "1"
        version = ".".join(map(str, parse_int_list(lines[-1])[:3]))
    except IndexError:
        raise CasParseError(f"unexpected CAS reply: {out.strip()[:200]!r}") from None
    key = hashlib.sha1(script.encode()).hexdigest()[:16]
    tr = cfg.log_dir / f"gp-{key}.log" if cfg.log_dir else None
    return ClassGroupReply(cyc, version, certified, tr, out)


def is_irreducible(coeffs, cfg: CasConfig, timeout: float | None = None) -> bool:
    out = run_gp(f"print(polisirreducible({gp_poly(coeffs)}))", cfg, timeout)
    return out.strip().splitlines()[-1].strip() == "1"

"""Minimal stand-in for the ``gp`` binary backed by cypari2.

Reads GP statements from stdin (one per line) and evaluates them in order.
Accepts the handful of ``gp`` flags the bridge passes: ``-q``, ``-f``,
``-D key=value`` and ``--version``.

    echo 'print(bnfinit(x^2+5).cyc)' | python3 -m galcovers.gpshim -q
"""

from __future__ import annotations

import sys


def _size(text: str) -> int:
    text = text.strip().upper()
    mult = {"K": 10**3, "M": 10**6, "G": 10**9}.get(text[-1:], 1)
    return int(text.rstrip("KMG")) * mult


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        import cypari2
    except ImportError:
        print("gpshim: cypari2 is not installed", file=sys.stderr)
        return 127
    pari = cypari2.Pari()
    if "--version" in argv or "--version-short" in argv:
        print(".".join(map(str, pari.version())))
        return 0
    size = 2 * 10**9
    it = iter(argv)
    for a in it:
        if a in ("-D", "--default"):
            key, _, val = next(it, "").partition("=")
            if key == "parisizemax":
                size = _size(val)
    pari.allocatemem(size, silent=True)
    for line in sys.stdin:
        line = line.strip()
        if not line or line.startswith("\\"):
            continue
        try:
            pari(line)
        except Exception as e:  # PariError and friends
            print(f"  ***   {e}", file=sys.stderr)
            return 1
        sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())

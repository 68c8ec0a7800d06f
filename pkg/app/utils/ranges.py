import re
from typing import Dict, Iterable, Tuple

from app.core.errors import InvalidParams

RANGE_RE = re.compile(r"^\s*([A-Za-z_]\w*)\s*=\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$")
OPTION_RE = re.compile(r"^--([A-Za-z_]\w*)(?:=(.*))?$")


def parse_range(text: str) -> Tuple[str, Tuple[int, int]]:
    """`n=1..40` -> ("n", (1, 40)); a bare `n=5` is the one-point range."""
    m = RANGE_RE.match(text)
    if not m:
        raise InvalidParams(f"cannot parse range {text!r}; expected name=lo..hi")
    name, lo = m.group(1), int(m.group(2))
    hi = int(m.group(3)) if m.group(3) is not None else lo
    if hi < lo:
        raise InvalidParams(f"empty range {text!r}")
    return name, (lo, hi)


def parse_ranges(items: Iterable[str]) -> Dict[str, Tuple[int, int]]:
    out: Dict[str, Tuple[int, int]] = {}
    for item in items:
        name, bounds = parse_range(item)
        if name in out:
            raise InvalidParams(f"range for {name!r} given twice")
        out[name] = bounds
    return out


def parse_param_args(args: Iterable[str]) -> Dict[str, int]:
    """Leftover CLI tokens `--n=2 --m 3` -> {"n": 2, "m": 3}."""
    out: Dict[str, int] = {}
    tokens = list(args)
    i = 0
    while i < len(tokens):
        m = OPTION_RE.match(tokens[i])
        if not m:
            raise InvalidParams(f"unexpected argument {tokens[i]!r}; expected --name=value")
        name, raw = m.group(1), m.group(2)
        if raw is None:
            if i + 1 >= len(tokens):
                raise InvalidParams(f"--{name} needs a value")
            i += 1
            raw = tokens[i]
        try:
            out[name] = int(raw)
        except ValueError:
            raise InvalidParams(f"--{name} must be an integer, got {raw!r}") from None
        i += 1
    return out

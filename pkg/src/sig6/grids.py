"""Inclusive grids and the ``start:stop:count`` grid syntax."""

from __future__ import annotations

import re


def linspace(start: float, stop: float, count: int) -> list[float]:
    """``count`` evenly spaced points from start to stop, both included."""
    if count < 1:
        raise ValueError("count must be at least 1")
    if count == 1:
        return [float(start)]
    step = (stop - start) / (count - 1)
    points = [start + i * step for i in range(count - 1)]
    points.append(float(stop))
    return points


_K_TOKEN = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\*?K$")


def parse_value(token: str, K: float | None = None) -> float:
    """A float, or a multiple of K such as ``K``, ``-K``, ``4K``, ``0.5K``."""
    token = token.strip()
    if token.endswith("K"):
        if K is None:
            raise ValueError(f"the K unit is not allowed here: {token!r}")
        if token in ("K", "+K"):
            return K
        if token == "-K":
            return -K
        m = _K_TOKEN.match(token)
        if not m:
            raise ValueError(f"malformed K multiple: {token!r}")
        return float(m.group(1)) * K
    return float(token)


def parse_grid(text: str, K: float | None = None) -> tuple[float, float, int]:
    """Parse ``start:stop:count``; start < stop unless count == 1."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must look like start:stop:count, got {text!r}")
    start = parse_value(parts[0], K)
    stop = parse_value(parts[1], K)
    count = int(parts[2])
    if count < 1:
        raise ValueError("grid count must be at least 1")
    if count > 1 and not start < stop:
        raise ValueError(f"grid needs start < stop, got {text!r}")
    return start, stop, count

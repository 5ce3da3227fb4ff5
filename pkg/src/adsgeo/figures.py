"""Deterministic SVG pictures of invisible domains on the unrolled cylinder.

Only the three-dimensional case is drawn: the boundary circle angle runs
horizontally, the lifted time angle vertically, the band between the lower
and upper envelopes is shaded and the limit-set samples are dots.  Output
bytes depend only on the inputs (fixed coordinate formatting, no
timestamps).
"""

import math

import numpy as np

from .invisible import envelope_grid
from .quadratic import GeometryError

DEFAULT_STYLE = {
    "band": "#aecde1",
    "minus": "#1f77b4",
    "plus": "#d62728",
    "points": "#1a1a1a",
    "background": "#ffffff",
}


def _fmt(v):
    return f"{v:.2f}"


def render_domain_svg(sample, grid=256, width=720, height=420, style=None):
    """SVG text for the envelope band of a sample with n = 2."""
    if sample.n != 2:
        raise GeometryError("cylinder pictures need n = 2")
    st = dict(DEFAULT_STYLE)
    if style:
        st.update(style)
    phis = np.linspace(0.0, 2.0 * math.pi, grid + 1)
    bdry = np.stack([np.zeros_like(phis), np.cos(phis), np.sin(phis)],
                    axis=1)
    lo, hi = envelope_grid(sample, bdry)
    sphis = np.mod(np.arctan2(sample.ys[:, 1], sample.ys[:, 0]),
                   2.0 * math.pi)
    tmin = min(lo.min(), sample.thetas.min()) - 0.4
    tmax = max(hi.max(), sample.thetas.max()) + 0.4
    mx, my = 45.0, 25.0

    def px(phi):
        return mx + (width - 2 * mx) * phi / (2.0 * math.pi)

    def py(theta):
        return height - my - (height - 2 * my) * (theta - tmin) / (tmax - tmin)

    band = " ".join(f"{_fmt(px(p))},{_fmt(py(t))}"
                    for p, t in zip(phis, hi))
    band += " " + " ".join(f"{_fmt(px(p))},{_fmt(py(t))}"
                           for p, t in zip(phis[::-1], lo[::-1]))
    minus = " ".join(f"{_fmt(px(p))},{_fmt(py(t))}"
                     for p, t in zip(phis, lo))
    plus = " ".join(f"{_fmt(px(p))},{_fmt(py(t))}"
                    for p, t in zip(phis, hi))
    dots = "".join(
        f'<circle cx="{_fmt(px(p))}" cy="{_fmt(py(t))}" r="2.5" '
        f'fill="{st["points"]}"/>' for p, t in zip(sphis, sample.thetas))
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
        f'<rect width="{width}" height="{height}" '
        f'fill="{st["background"]}"/>'
        f'<polygon points="{band}" fill="{st["band"]}" stroke="none"/>'
        f'<polyline points="{minus}" fill="none" stroke="{st["minus"]}" '
        f'stroke-width="1.5"/>'
        f'<polyline points="{plus}" fill="none" stroke="{st["plus"]}" '
        f'stroke-width="1.5"/>'
        f"{dots}"
        "</svg>\n")

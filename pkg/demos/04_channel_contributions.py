"""Which channels carry the synchrony, and at which frequency.

Vertical channels of both partners lock at 2 Hz while horizontal channels
lock at 0.5 Hz. Projecting every pairwise product onto the local major axis
and averaging over the partner's channels yields one nonnegative map per
channel; its frequency profile should peak at that channel's planted
frequency, reproducing the vertical-fast / horizontal-slow split.
"""

from pathlib import Path

import numpy as np

from gxwt import (
    MultiChannelSeries,
    analytic_cwt,
    channel_contributions,
    cone_of_influence,
    gxwt,
    make_grid,
)

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

fs, duration = 100.0, 96.0
t = np.arange(int(fs * duration)) / fs
planted = {"v1": 2.0, "v2": 2.0, "v3": 2.0, "h1": 0.5, "h2": 0.5, "h3": 0.5}


def dancer(seed):
    r = np.random.default_rng(seed)
    data = np.stack(
        [np.cos(2 * np.pi * f * t + 0.25 * r.standard_normal()) for f in planted.values()],
        axis=1,
    )
    return MultiChannelSeries(data, fs, tuple(planted))


x, y = dancer(11), dancer(12)
grid = make_grid(0.125, 4.0, 2)
u, v = analytic_cwt(x, grid), analytic_cwt(y, grid)
g = gxwt(u, v)
cx, cy = channel_contributions(u, v, g)
mask = cone_of_influence(grid, x.n_samples, fs)


def profile(tensor, j):
    return np.array(
        [
            tensor.values[fi, mask.inside[fi], j].mean() if mask.inside[fi].any() else np.nan
            for fi in range(grid.n_frequencies)
        ]
    )


for side, tensor in (("first dancer", cx), ("second dancer", cy)):
    print(f"{side}: contribution peak per channel")
    for j, name in enumerate(tensor.channel_names):
        p = profile(tensor, j)
        peak = grid.frequencies[np.nanargmax(p)]
        print(f"  {name}: peak at {peak:5.3f} Hz (planted {planted[name]:5.3f} Hz), "
              f"peak mean contribution {np.nanmax(p):.3f}")
    print()

grand_x = cx.values.mean(axis=2)
grand_y = cy.values.mean(axis=2)
print(f"grand means agree across sides: "
      f"{np.allclose(grand_x, grand_y, rtol=1e-12, atol=1e-14)}")

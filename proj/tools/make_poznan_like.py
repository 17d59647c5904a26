#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Generate scenarios/poznan-like.json, a synthetic old-town coverage scenario.

Layout: a 1 km x 1 km Manhattan grid of 8 x 8 blocks (100 m blocks, 20 m
streets) with an open market square in the middle four blocks and a town hall
inside it. Each block holds two or three buildings of 14-34 m; a few are
L-shaped. Eight rooftop sites carry three cells each (800 / 2100 / 3500 MHz).
Fifteen reflecting panels hang 0.5 m off street-facing facades, each facing
the street on the side of its nearest site.

The output is deterministic; rerunning the script reproduces the file byte for
byte.
"""

import json
import math
import pathlib

BLOCKS = 8
PITCH = 120.0
BLOCK = 100.0
STREET = 20.0
BS_HEIGHT = 42.5
SQUARE = {(3, 3), (3, 4), (4, 3), (4, 4)}

CELL_TYPES = [
    # frequency, bandwidth, duty cycle, elements, gain, feeder, power, noise factor, shadow, implementation
    dict(f=800e6, bw=80e6, s=0.0, m=1, ga=16.0, lf=2.0, p=46.0, nf=8.0, sm=12.8, il=0.0),
    dict(f=2100e6, bw=120e6, s=0.0, m=1, ga=18.0, lf=2.0, p=49.0, nf=8.0, sm=15.2, il=0.0),
    dict(f=3500e6, bw=120e6, s=25.0, m=64, ga=24.0, lf=3.0, p=53.0, nf=7.0, sm=10.0, il=3.0),
]

# Blocks whose roof carries a site.
SITE_BLOCKS = [(1, 1), (1, 6), (6, 1), (6, 6), (2, 3), (5, 4), (3, 1), (4, 6)]

# (block i, block j, facade) for panels; facade in {"W", "E", "S", "N"}.
PANEL_FACADES = [
    (0, 3, "E"), (2, 0, "N"), (3, 5, "E"), (7, 2, "W"), (5, 7, "S"),
    (2, 5, "N"), (4, 2, "W"), (6, 3, "S"), (1, 4, "E"), (5, 1, "N"),
    (3, 7, "S"), (7, 5, "W"), (0, 6, "E"), (6, 0, "N"), (2, 2, "E"),
]


def block_origin(i, j):
    return STREET + PITCH * i, STREET + PITCH * j


def height_for(i, j, k):
    # Deterministic spread over [14, 34] m.
    return 14.0 + float(((i * 7 + j * 13 + k * 5) * 37) % 21)


def rect(x0, y0, x1, y1):
    return [[x0, y0], [x1, y0], [x1, y1], [x0, y1]]


def buildings():
    out = []
    bid = 0
    for i in range(BLOCKS):
        for j in range(BLOCKS):
            if (i, j) in SQUARE:
                continue
            x0, y0 = block_origin(i, j)
            x1, y1 = x0 + BLOCK, y0 + BLOCK
            if (i + j) % 5 == 0:
                # L-shaped corner building plus a filler in the notch.
                xm, ym = x0 + 60.0, y0 + 60.0
                footprint = [[x0, y0], [x1, y0], [x1, ym], [xm, ym], [xm, y1], [x0, y1]]
                out.append(dict(id=bid, footprint=footprint, height_m=height_for(i, j, 0)))
                bid += 1
                out.append(dict(id=bid, footprint=rect(xm + 10.0, ym + 10.0, x1, y1),
                                height_m=height_for(i, j, 1)))
                bid += 1
            elif (i * 3 + j) % 2 == 0:
                xm = x0 + 50.0
                out.append(dict(id=bid, footprint=rect(x0, y0, xm, y1), height_m=height_for(i, j, 0)))
                bid += 1
                out.append(dict(id=bid, footprint=rect(xm, y0, x1, y1), height_m=height_for(i, j, 1)))
                bid += 1
            else:
                ya, yb = y0 + 35.0, y0 + 65.0
                for k, (lo, hi) in enumerate([(y0, ya), (ya, yb), (yb, y1)]):
                    out.append(dict(id=bid, footprint=rect(x0, lo, x1, hi), height_m=height_for(i, j, k)))
                    bid += 1
    # Town hall in the middle of the market square.
    cx = STREET + PITCH * 4 - STREET / 2
    out.append(dict(id=bid, footprint=rect(cx - 25.0, cx - 15.0, cx + 25.0, cx + 15.0), height_m=30.0))
    return out


def sites():
    out = []
    for i, j in SITE_BLOCKS:
        x0, y0 = block_origin(i, j)
        out.append([x0 + BLOCK / 2, y0 + BLOCK / 2, BS_HEIGHT])
    return out


def cells(site_positions):
    out = []
    for s, pos in enumerate(site_positions):
        for k, t in enumerate(CELL_TYPES):
            out.append(dict(
                id=3 * s + k,
                site_position=pos,
                frequency_hz=t["f"],
                tx_power_dbm=t["p"],
                antenna_gain_dbi=t["ga"],
                feeder_loss_db=t["lf"],
                antenna_elements=t["m"],
                margins=dict(interference_db=2.0, doppler_db=3.0, fade_db=10.0,
                             shadow_db=t["sm"], implementation_db=t["il"]),
                passthrough=dict(bandwidth_hz=t["bw"], used_subcarriers=320, total_subcarriers=512,
                                 sampling_factor=1.536, reuse_factor=1, coherence_time_s=0.05,
                                 coherence_bandwidth_hz=1e6, spatial_duty_cycle_pct=t["s"],
                                 noise_factor_db=t["nf"]),
            ))
    return out


def panels():
    out = []
    normals = {"W": [-1.0, 0.0, 0.0], "E": [1.0, 0.0, 0.0], "S": [0.0, -1.0, 0.0], "N": [0.0, 1.0, 0.0]}
    for pid, (i, j, side) in enumerate(PANEL_FACADES):
        x0, y0 = block_origin(i, j)
        cx, cy = x0 + BLOCK / 2, y0 + BLOCK / 2
        offset = BLOCK / 2 + 0.5
        n = normals[side]
        out.append(dict(
            id=pid,
            center=[cx + n[0] * offset, cy + n[1] * offset, BS_HEIGHT],
            unit_normal=n,
            rows=102, cols=100,
            pitch_row_m=0.01, pitch_col_m=0.01,
            amplitude=0.9,
            pattern_exponent=1.0,
        ))
    return out


def main():
    site_positions = sites()
    doc = dict(
        meta=dict(
            name="poznan-like",
            description=(
                "Synthetic old-town scenario: 1 km x 1 km block grid (100 m blocks, 20 m streets) with an "
                "open market square and town hall at the centre; 8 rooftop sites x 3 cells at 42.5 m; "
                "15 panels of 102 x 100 elements hung 0.5 m off street-facing facades with horizontal "
                "normals pointing into the street (orientations chosen per panel, listed in ris_panels). "
                "Not real city geometry."),
            determinism="No random inputs; every output is a pure function of this file."),
        grid=dict(origin=[0.0, 0.0], cell_size_m=5.0, nx=200, ny=200, receiver_height_m=1.5),
        buildings=buildings(),
        cells=cells(site_positions),
        ris_panels=panels(),
        model_options=dict(unit_cell_gain_override=None, pattern_exponent_default=1.0,
                           ris_rx_gain_dbi=0.0, bs_height_m=BS_HEIGHT),
    )
    path = pathlib.Path(__file__).resolve().parent.parent / "scenarios" / "poznan-like.json"
    path.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {path}: {len(doc['buildings'])} buildings, {len(doc['cells'])} cells, "
          f"{len(doc['ris_panels'])} panels")


if __name__ == "__main__":
    main()

"""Regenerate src/honeysim/_adf_table.py.

The package computes ADF p-values from a frozen interpolation grid over
the MacKinnon response-surface approximation (constant-only regression,
one estimated root).  This script samples that surface via statsmodels,
stores probit-scale knots (z = ndtri(p)) on a uniform statistic grid, and
emits them as a Python module.  Interpolating on the probit scale keeps
the reconstruction error below 1e-6 in p.

Run from the repo root:  python tools/gen_adf_table.py
"""

from __future__ import annotations

import pathlib

import numpy as np
from scipy.special import ndtri
from statsmodels.tsa.adfvalues import mackinnonp

STAT_LO = -18.80
STAT_STEP = 0.01

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "honeysim" / "_adf_table.py"


def main() -> None:
    # Find the largest grid statistic where the surface is still < 1.0;
    # everything strictly above it maps to p = 1.0 exactly.
    stats_scan = np.arange(0.0, 6.0, STAT_STEP)
    p_scan = np.array([mackinnonp(s, regression="c", N=1) for s in stats_scan])
    hi_idx = int(np.argmax(p_scan >= 1.0))
    p_one_at = float(stats_scan[hi_idx - 1])

    n_knots = int(round((p_one_at - STAT_LO) / STAT_STEP)) + 1
    knots = np.linspace(STAT_LO, p_one_at, n_knots)
    p = np.array([mackinnonp(s, regression="c", N=1) for s in knots])
    if not (np.all(p > 0.0) and np.all(p < 1.0)):
        raise SystemExit("grid touches a saturated p-value; adjust bounds")
    z = ndtri(p)

    lines = []
    lines.append('"""Frozen probit-scale grid for ADF p-values.')
    lines.append("")
    lines.append("Knots sample the MacKinnon (1994/2010) response-surface p-value")
    lines.append("approximation for the Dickey-Fuller t distribution (constant-only")
    lines.append("regression, one estimated unit root) on a uniform statistic grid.")
    lines.append("Values are stored as z = ndtri(p); consumers interpolate z linearly")
    lines.append("and map back through the normal CDF.  Regenerate with")
    lines.append('tools/gen_adf_table.py."""')
    lines.append("")
    lines.append("import numpy as np")
    lines.append("")
    lines.append(f"STAT_LO = {STAT_LO!r}")
    lines.append(f"STAT_STEP = {STAT_STEP!r}")
    lines.append("# Statistics strictly above this value map to p = 1.0 exactly;")
    lines.append("# statistics below STAT_LO map to p = 0.0.")
    lines.append(f"STAT_HI = {p_one_at!r}")
    lines.append("")
    lines.append("Z_KNOTS = np.array([")
    vals = [f"{v:.9f}" for v in z]
    for i in range(0, len(vals), 8):
        lines.append("    " + ", ".join(vals[i : i + 8]) + ",")
    lines.append("])")
    lines.append("")
    OUT.write_text("\n".join(lines))
    print(f"wrote {OUT} ({len(knots)} knots, p=1 clamp at {p_one_at})")


if __name__ == "__main__":
    main()

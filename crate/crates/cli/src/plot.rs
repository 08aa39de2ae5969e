//! Standalone matplotlib scripts that render the CSV outputs.

pub fn region_script(csv_name: &str, examples: Option<&str>) -> String {
    let examples = examples.map_or("None".to_owned(), |e| format!("{e:?}"));
    format!(
        r##"# Region chart for a scan produced by `natred scan`.
import csv
from pathlib import Path

import matplotlib.pyplot as plt

HERE = Path(__file__).resolve().parent
DATA = HERE / {csv_name:?}
EXAMPLES = {examples}

rows = list(csv.DictReader(open(DATA)))
def column(name, kind=float):
    return [kind(r[name]) for r in rows]

t1, t2 = column("t1"), column("t2")
yes = lambda v: v == "true"
necessary = column("necessary", yes)
sufficient = column("sufficient", yes)
cad = column("cad", str)

fig, ax = plt.subplots(figsize=(6, 6))
groups = [
    ("necessary fails", [not n for n in necessary], "#d9d9d9"),
    ("necessary holds", necessary, "#9ecae1"),
    ("CAD solvable", [c == "inside" for c in cad], "#fdae6b"),
    ("sufficient holds", sufficient, "#31a354"),
]
for label, mask, color in groups:
    xs = [x for x, m in zip(t1, mask) if m]
    ys = [y for y, m in zip(t2, mask) if m]
    if xs:
        ax.scatter(xs, ys, s=12, marker="s", color=color, label=label, linewidths=0)

if EXAMPLES is not None:
    ex = list(csv.DictReader(open(HERE / EXAMPLES)))
    ax.scatter([float(r["t1"]) for r in ex], [float(r["t2"]) for r in ex], color="red", s=40, zorder=3)
    for r in ex:
        ax.annotate(r["label"], (float(r["t1"]), float(r["t2"])), fontsize=7, xytext=(4, 4), textcoords="offset points")

ax.set_xlabel("$T_1$")
ax.set_ylabel("$T_2$")
ax.set_aspect("equal")
ax.legend(loc="upper right", fontsize=8)
fig.savefig(DATA.with_suffix(".png"), dpi=150, bbox_inches="tight")
"##
    )
}

pub fn surface_script(csv_name: &str) -> String {
    format!(
        r##"# Scalar curvature surface produced by `natred surface`.
import csv
from pathlib import Path

import matplotlib.pyplot as plt
import numpy as np

HERE = Path(__file__).resolve().parent
DATA = HERE / {csv_name:?}

rows = list(csv.DictReader(open(DATA)))
a1 = np.array([float(r["alpha1"]) for r in rows])
a2 = np.array([float(r["alpha2"]) for r in rows])
s = np.array([float(r["scalar"]) if r["scalar"] else np.nan for r in rows])

n1, n2 = len(np.unique(a1)), len(np.unique(a2))
A1, A2, S = (v.reshape(n1, n2) for v in (a1, a2, s))

fig = plt.figure(figsize=(7, 6))
ax = fig.add_subplot(projection="3d")
ax.plot_surface(A1, A2, np.ma.masked_invalid(S), cmap="viridis", linewidth=0)
best = np.nanargmax(s)
ax.scatter([a1[best]], [a2[best]], [s[best]], color="red", s=30)
ax.set_xlabel(r"$\alpha_1$")
ax.set_ylabel(r"$\alpha_2$")
ax.set_zlabel("S")
fig.savefig(DATA.with_suffix(".png"), dpi=150, bbox_inches="tight")
"##
    )
}

"""Structural summary of a few small networks.

Run: python3 demos/01_structure.py
"""

from crnreal import deficiency, is_reversible, is_weakly_reversible, linkage_classes, load
from crnreal.network import stoichiometric_subspace_dim

from _paths import DATA

for name in ("lotka-network.crn", "fig2a.crn", "fig2b.crn", "fig2c.crn", "fig3-flux.crn"):
    G = load(DATA / name).network
    print(f"{name:18s} |V|={len(G.vertices)}  classes={len(linkage_classes(G))}  "
          f"dim S={stoichiometric_subspace_dim(G)}  deficiency={deficiency(G)}  "
          f"reversible={is_reversible(G)}  weakly reversible={is_weakly_reversible(G)}")

# The Lotka-Volterra network has three linkage classes, each a single one-way edge,
# so it is neither reversible nor weakly reversible.

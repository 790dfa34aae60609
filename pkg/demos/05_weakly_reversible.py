"""Weakly reversible realizations by dense support and trimming, with a scaling certificate."""

from crnreal import is_weakly_reversible, load, realize_ma_wr

from _paths import DATA

for name in ("fig2a.crn", "lotka.crn"):
    M = load(DATA / name).system
    res = realize_ma_wr(M)
    print(f"{name}: {res.status.value}  ({'; '.join(res.log)})")
    if res.found:
        print("  weakly reversible:", is_weakly_reversible(res.system), " edges:", len(res.system.network.edges))
        print("  min alpha:", min(res.scaling.values()))

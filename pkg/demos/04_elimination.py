"""Removing a virtual source.

X is a source whose two outgoing reactions cancel, so the monomial x never
appears in the dynamics.  Eliminating it reroutes the flux through X.
"""

from crnreal import check_flux_equivalence, classify_flux, eliminate, find_virtual_sources, load
from crnreal.textio import format_complex

from _paths import DATA

F = load(DATA / "line-cb.crn").system
sp = F.species
print("virtual sources:", [format_complex(F.network.vertices[i], sp) for i in sorted(find_virtual_sources(F))])
G, report = eliminate(F, (1,))
print("variant:", report.variant)
for (s, t), j in sorted(G.weight_map().items()):
    print(f"  {format_complex(s, sp)} -> {format_complex(t, sp)} : {j}")
print("dropped self-loops:", [(format_complex(c, sp), str(w)) for c, w in report.self_loops_dropped])
print("flux equivalent:", check_flux_equivalence(F, G), " complex-balanced:", classify_flux(G).is_complex_balanced)

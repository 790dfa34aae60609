"""JSON-ready reports and their plain-text rendering.

Rationals are serialised as strings (``"3"``, ``"1/2"``) so reports stay
exact.  Every report carries ``schema_version``, ``command``, ``status`` and
``exit_code``; the schema ships as ``docs/report.schema.json``.
"""

from fractions import Fraction
from typing import Dict, List, Optional

from .network import (FluxSystem, MassActionSystem, classify_flux, classify_state, deficiency, eval_rhs,
                      is_reversible, is_weakly_reversible, kinetic_subspace_dim, linkage_classes, lint,
                      source_vertices, stoichiometric_subspace_dim)
from .realize import RealizationResult, Status, find_virtual_sources
from .textio import NetworkDocument, document_of, format_complex

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_DATA = 65

_STATUS_EXIT = {"ok": EXIT_OK, "true": EXIT_OK, "Found": EXIT_OK, "false": EXIT_NEGATIVE,
                "Infeasible": EXIT_NEGATIVE, "Unknown": EXIT_UNKNOWN}


def q(v) -> str:
    return str(Fraction(v))


def _coords(v) -> List[str]:
    return [q(c) for c in v]


def _header(command: str, status: str) -> Dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "status": status,
            "exit_code": _STATUS_EXIT[status]}


def canonical(system):
    """Same system with edges sorted by (source, target) coordinates."""
    if system is None:
        return None
    items = sorted(system.weight_map().items())
    return type(system).from_reactions(system.species, [(s, t, w) for (s, t), w in items])


def describe_system(obj) -> Dict:
    doc = document_of(obj)
    net = doc.network
    edges = []
    for k, (s, t) in enumerate(net.edges):
        e = {"source": format_complex(net.vertices[s], net.species),
             "target": format_complex(net.vertices[t], net.species)}
        if doc.weights is not None:
            e["weight"] = q(doc.weights[k])
        edges.append(e)
    return {"mode": doc.mode, "species": list(net.species), "edges": edges}


def _classification(c) -> Dict:
    return {"steady_state": c.is_steady_state, "detailed_balanced": c.is_detailed_balanced,
            "complex_balanced": c.is_complex_balanced}


def analyze_report(doc: NetworkDocument, state=None) -> Dict:
    net = doc.network
    sp = net.species
    system = doc.system
    rep = _header("analyze", "ok")
    rep.update({
        "mode": doc.mode,
        "species": list(sp),
        "n_species": len(sp),
        "n_vertices": len(net.vertices),
        "n_edges": len(net.edges),
        "vertices": [{"index": i, "complex": format_complex(v, sp), "coords": _coords(v)}
                     for i, v in enumerate(net.vertices)],
        "n_linkage_classes": len(linkage_classes(net)),
        "linkage_classes": linkage_classes(net),
        "source_vertices": sorted(source_vertices(net)),
        "reversible": is_reversible(net),
        "weakly_reversible": is_weakly_reversible(net),
        "stoichiometric_dim": stoichiometric_subspace_dim(net),
        "deficiency": deficiency(net),
        "lint": lint(net),
    })
    if isinstance(system, (FluxSystem, MassActionSystem)):
        rep["virtual_sources"] = sorted(find_virtual_sources(system))
    if isinstance(system, MassActionSystem):
        rep["kinetic_dim"] = kinetic_subspace_dim(system)
    if isinstance(system, FluxSystem):
        rep["classification"] = _classification(classify_flux(system))
    if state is not None:
        rep["state"] = _coords(state)
        rep["classification"] = _classification(classify_state(system, state))
        rep["rhs"] = [q(v) if isinstance(v, Fraction) else repr(v) for v in eval_rhs(system, state)]
    return rep


def check_report(relation: str, equivalent: bool) -> Dict:
    rep = _header("check", "true" if equivalent else "false")
    rep.update({"relation": relation, "equivalent": equivalent})
    return rep


def realize_report(command: str, procedure: str, res: RealizationResult) -> Dict:
    rep = _header(command, res.status.value)
    system = canonical(res.system)
    sp = system.species if system is not None else None
    rep.update({
        "target": res.target,
        "procedure": procedure,
        "witness": describe_system(system) if system is not None else None,
        "state": _coords(res.state) if res.state is not None else None,
        "state_approx": [float(f"{v:.12g}") for v in res.state_approx] if res.state_approx else None,
        "monomials": ([{"complex": format_complex(y, sp), "value": q(m)}
                       for y, m in sorted(res.monomials.items())]
                      if res.monomials and res.status is Status.FOUND else None),
        "scaling": ([{"source": format_complex(s, sp), "target": format_complex(t, sp), "alpha": q(a)}
                     for (s, t), a in sorted(res.scaling.items())] if res.scaling else None),
        "certificate": [{"check": name, "ok": ok} for name, ok in res.certificate.checks],
        "log": list(res.log),
    })
    return rep


def eliminate_report(system, report) -> Dict:
    rep = _header("eliminate", "ok")
    sp = system.species
    pot = (lambda d: [{"complex": format_complex(y, sp), "potential": q(p)} for y, p in sorted(d.items())])
    rep.update({
        "variant": report.variant,
        "removed": format_complex(report.removed, sp),
        "result": describe_system(canonical(system)),
        "deltas": [{"source": format_complex(s, sp), "target": format_complex(t, sp), "delta": q(d)}
                   for (s, t), d in sorted(report.deltas.items())],
        "self_loops_dropped": [{"complex": format_complex(z, sp), "weight": q(w)}
                               for z, w in report.self_loops_dropped],
        "potentials_before": pot(report.potentials_before) if report.potentials_before is not None else None,
        "potentials_after": pot(report.potentials_after) if report.potentials_after is not None else None,
    })
    return rep


def error_report(command: Optional[str], exit_code: int, message: str) -> Dict:
    return {"schema_version": SCHEMA_VERSION, "command": command or "", "status": "error",
            "exit_code": exit_code, "error": message}


# ------------------------------------------------------------------ text

def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _edge_lines(desc: Dict) -> List[str]:
    out = []
    for e in desc["edges"]:
        w = f" : {e['weight']}" if "weight" in e else ""
        out.append(f"  {e['source']} -> {e['target']}{w}")
    return out


def render_text(rep: Dict) -> str:
    cmd = rep["command"]
    lines: List[str] = []
    if rep["status"] == "error":
        return f"error: {rep['error']}\n"
    if cmd == "analyze":
        lines += [
            f"mode: {rep['mode']}",
            f"species: {rep['n_species']} ({' '.join(rep['species'])})",
            f"vertices: {rep['n_vertices']}",
            f"edges: {rep['n_edges']}",
            f"linkage classes: {rep['n_linkage_classes']}",
            "source vertices: " + ", ".join(rep["vertices"][i]["complex"] for i in rep["source_vertices"]),
            f"reversible: {_yn(rep['reversible'])}",
            f"weakly reversible: {_yn(rep['weakly_reversible'])}",
            f"stoichiometric dim: {rep['stoichiometric_dim']}",
            f"deficiency: {rep['deficiency']}",
        ]
        if "kinetic_dim" in rep:
            lines.append(f"kinetic dim: {rep['kinetic_dim']}")
        if "virtual_sources" in rep:
            lines.append("virtual sources: " + (", ".join(rep["vertices"][i]["complex"]
                                                          for i in rep["virtual_sources"]) or "none"))
        if "state" in rep:
            lines.append(f"state: ({', '.join(rep['state'])})")
            lines.append(f"rhs: ({', '.join(rep['rhs'])})")
        if "classification" in rep:
            c = rep["classification"]
            lines += [f"steady state: {_yn(c['steady_state'])}",
                      f"detailed-balanced: {_yn(c['detailed_balanced'])}",
                      f"complex-balanced: {_yn(c['complex_balanced'])}"]
        lines += [f"lint: {note}" for note in rep["lint"]]
    elif cmd == "check":
        lines.append(f"{rep['relation']}: {'equivalent' if rep['equivalent'] else 'not equivalent'}")
    elif cmd == "eliminate":
        lines.append(f"eliminated {rep['removed']} ({rep['variant']})")
        lines.append("result:")
        lines += _edge_lines(rep["result"])
        lines.append("changes:")
        lines += [f"  {d['source']} -> {d['target']} : {d['delta']}" for d in rep["deltas"]]
        for s in rep["self_loops_dropped"]:
            lines.append(f"dropped self-loop at {s['complex']} : {s['weight']}")
        if rep["potentials_after"] is not None:
            lines.append("potentials after: " + ", ".join(f"{p['complex']}={p['potential']}"
                                                           for p in rep["potentials_after"]))
    else:
        lines.append(f"{rep['status']}: {rep['target']} realization ({rep['procedure']})")
        if rep["witness"] is not None:
            lines.append("witness:")
            lines += _edge_lines(rep["witness"])
        if rep["state"] is not None:
            lines.append(f"state: ({', '.join(rep['state'])})")
        elif rep["state_approx"] is not None:
            lines.append("state (approximate): (" + ", ".join(repr(v) for v in rep["state_approx"]) + ")")
        if rep["monomials"]:
            lines.append("monomials: " + ", ".join(f"{m['complex']}={m['value']}" for m in rep["monomials"]))
        if rep["scaling"]:
            lines.append("scaling: " + ", ".join(f"{a['source']} -> {a['target']}={a['alpha']}"
                                                 for a in rep["scaling"]))
        for c in rep["certificate"]:
            lines.append(f"check {'ok' if c['ok'] else 'FAILED'}: {c['check']}")
        lines += [f"log: {entry}" for entry in rep["log"]]
    return "\n".join(lines) + "\n"

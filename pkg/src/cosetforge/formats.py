"""Text formats: analysis tables (CSV/JSON/Markdown) and geometry files.

Geometry file::

    # hemidodecahedron
    degree 5
    G:  (2,3)(4,5) (1,2)(3,4) (2,5)(3,4)
    G0: (1,2)(3,4) (2,5)(3,4)
    G1: (2,3)(4,5) (2,5)(3,4)

Permutations are 1-based cycle notation separated by whitespace; ``()`` is
the identity and an empty list gives the trivial subgroup.
"""

import csv
import io
import json
import re

from .analysis import AnalysisRow
from .errors import MalformedRecord
from .geometry import TransitivityClass, make_coset_geometry
from .groups import PermGroup
from .perm import format_cycles, parse_cycles

CSV_COLUMNS = (
    "graph_id",
    "h_order",
    "h0_order",
    "h1_order",
    "h01_order",
    "max",
    "norm",
    "dual",
    "maxord",
    "core_free",
    "connected",
    "transitivity",
    "k",
)


def _bool(text):
    if text not in ("true", "false"):
        raise MalformedRecord(f"expected true/false, got {text!r}")
    return text == "true"


def row_to_record(row):
    t = row.transitivity
    k = ""
    if t.k is not None:
        k = f">={t.k}" if t.k_capped else str(t.k)
    return {
        "graph_id": row.graph_id,
        "h_order": str(row.h_order),
        "h0_order": str(row.h0_order),
        "h1_order": str(row.h1_order),
        "h01_order": str(row.h01_order),
        "max": row.max_string,
        "norm": row.norm_string,
        "dual": "" if row.dual is None else str(row.dual),
        "maxord": str(row.maxord),
        "core_free": "true" if row.core_free else "false",
        "connected": "true" if row.connected else "false",
        "transitivity": t.kind,
        "k": k,
    }


def record_to_row(rec):
    k_text = rec["k"]
    capped = k_text.startswith(">=")
    k = int(k_text[2:] if capped else k_text) if k_text else None
    return AnalysisRow(
        graph_id=rec["graph_id"],
        h_order=int(rec["h_order"]),
        h0_order=int(rec["h0_order"]),
        h1_order=int(rec["h1_order"]),
        h01_order=int(rec["h01_order"]),
        max_string=rec["max"],
        norm_string=rec["norm"],
        dual=int(rec["dual"]) if rec["dual"] else None,
        maxord=int(rec["maxord"]),
        core_free=_bool(rec["core_free"]),
        connected=_bool(rec["connected"]),
        transitivity=TransitivityClass(rec["transitivity"], k, capped),
    )


def csv_header():
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(CSV_COLUMNS)
    return buf.getvalue()


def rows_to_csv(rows, header=True):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    if header:
        writer.writeheader()
    for row in rows:
        writer.writerow(row_to_record(row))
    return buf.getvalue()


def rows_from_csv(text):
    return [record_to_row(rec) for rec in csv.DictReader(io.StringIO(text))]


def row_to_json(row):
    rec = row_to_record(row)
    out = {
        k: (int(v) if k in ("h_order", "h0_order", "h1_order", "h01_order", "maxord") else v)
        for k, v in rec.items()
    }
    out["dual"] = row.dual
    out["core_free"] = row.core_free
    out["connected"] = row.connected
    out["k"] = row.transitivity.k
    out["k_capped"] = row.transitivity.k_capped
    if row.h_fingerprint is not None:
        out["h_fingerprint"] = row.h_fingerprint.to_dict()
    return out


def rows_to_json(rows):
    return json.dumps([row_to_json(r) for r in rows], indent=2, sort_keys=True) + "\n"


MARKDOWN_HEADER = (
    "| Graph | |H| | |H0| | |H1| | |H01| | Max | Norm | Dual | MaxOrd |\n"
    "|---|---|---|---|---|---|---|---|---|\n"
)


def rows_to_markdown(rows, header=True):
    lines = [MARKDOWN_HEADER] if header else []
    for r in rows:
        dual = "-" if r.dual is None else str(r.dual)
        lines.append(
            f"| {r.graph_id} | {r.h_order} | {r.h0_order} | {r.h1_order} | {r.h01_order} "
            f"| {r.max_string} | {r.norm_string} | {dual} | {r.maxord} |\n"
        )
    return "".join(lines)


# -- geometry files -------------------------------------------------------------

_PERM_TOKEN = re.compile(r"(?:\([^)]*\))+")


def parse_perm_list(text, degree):
    text = text.strip()
    tokens = _PERM_TOKEN.findall(text)
    rest = _PERM_TOKEN.sub(" ", text).replace(",", " ").strip()
    if rest:
        raise MalformedRecord(f"unexpected text {rest!r} in permutation list")
    return [parse_cycles(t, degree) for t in tokens]


def parse_geometry_text(text):
    """Return (degree, gens of G, gens of G0, gens of G1)."""
    degree = None
    lists = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("degree"):
            try:
                degree = int(line.split()[1])
            except (IndexError, ValueError):
                raise MalformedRecord(f"line {lineno}: bad degree line") from None
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("G", "G0", "G1"):
            raise MalformedRecord(f"line {lineno}: expected 'G:', 'G0:' or 'G1:'")
        if degree is None:
            raise MalformedRecord("degree line must come before generator lists")
        lists[key] = parse_perm_list(rest, degree)
    missing = {"G", "G0", "G1"} - set(lists)
    if degree is None or missing:
        raise MalformedRecord(f"geometry file is missing {sorted(missing) or ['degree']}")
    return degree, lists["G"], lists["G0"], lists["G1"]


def load_geometry(text):
    degree, g, g0, g1 = parse_geometry_text(text)
    G = PermGroup(degree, g)
    return make_coset_geometry(G, g0, g1)


def geometry_to_text(geo, comment=None):
    def fmt(H):
        return " ".join(format_cycles(g) for g in H.generators)

    lines = [f"# {comment}"] if comment else []
    lines.append(f"degree {geo.group.degree}")
    lines.append(f"G: {fmt(geo.group)}")
    lines.append(f"G0: {fmt(geo.sub0)}")
    lines.append(f"G1: {fmt(geo.sub1)}")
    return "\n".join(lines) + "\n"


def perm_to_json(p):
    return list(p)


def group_to_json(G):
    return {"degree": G.degree, "generators": [list(g) for g in G.generators]}


def group_from_json(obj):
    return PermGroup(obj["degree"], [tuple(g) for g in obj["generators"]])

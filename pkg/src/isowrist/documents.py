"""Serializable documents for the solution catalog, wrists and postures.

Numbers serialize as shortest round-trip decimals (Python repr), so a
JSON document re-parsed with the standard library reproduces every
float bit-identically.  Catalog components additionally carry their
exact-radical spellings, e.g. "-2*sqrt(2)/3", so downstream tools can
choose their own precision.  Angles are degrees at this surface and
radians inside the library.
"""

from __future__ import annotations

import csv
import io
import math
from datetime import datetime, timezone

from .classify import WristClass, antipodal_map_table, reflection_map_table
from .kinematics import IsotropyReport
from .solver import SolutionRecord, radical_string
from .spheregeom import PlatonicSolid, isotropy_of, platonic_vertices, second_moment

SCHEMA_VERSION = "1"
GENERATOR = "isowrist"

COMPONENT_NAMES = ("c", "s", "x", "y", "z", "u", "v", "w")
CSV_HEADER = ("#",) + COMPONENT_NAMES

PLATONIC_FOOTNOTE = (
    "The tabulated constant for each solid is sigma^2 = n/3, the factor by which the "
    "second-moment tensor multiplies the identity; the common singular value itself is "
    "sigma = sqrt(n/3)."
)


def _metadata(tolerance: float | None = None) -> dict:
    meta = {"generator": GENERATOR, "timestamp": datetime.now(timezone.utc).isoformat()}
    if tolerance is not None:
        meta["tolerance"] = tolerance
    return meta


def solution_document(solutions, tolerance: float = 1e-12) -> dict:
    """Document carrying all 32 solutions with exact-radical spellings."""
    entries = []
    for rec in solutions:
        entry = {"index": rec.index}
        entry.update({name: value for name, value in zip(COMPONENT_NAMES, rec.components)})
        entry["radicals"] = {name: radical_string(value) for name, value in zip(COMPONENT_NAMES, rec.components)}
        entries.append(entry)
    return {"schema_version": SCHEMA_VERSION, "metadata": _metadata(tolerance), "solutions": entries}


def parse_solution_document(doc: dict) -> list:
    """Rebuild SolutionRecord values from a parsed solution document."""
    return [
        SolutionRecord(*(entry[name] for name in COMPONENT_NAMES), index=entry["index"])
        for entry in doc["solutions"]
    ]


def solution_csv(solutions) -> str:
    """RFC-4180-style CSV of the catalog: header row plus 32 data rows."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for rec in solutions:
        writer.writerow([rec.index] + [repr(v) for v in rec.components])
    return buf.getvalue()


def solution_table(solutions) -> str:
    """Human-readable fixed-width table of the catalog."""
    lines = ["  # " + "".join(f"{name:>14}" for name in COMPONENT_NAMES)]
    for rec in solutions:
        lines.append(f"{rec.index:>3} " + "".join(f"{v:>14.9f}" for v in rec.components))
    return "\n".join(lines) + "\n"


def _class_entry(w: WristClass) -> dict:
    twists_deg = [math.degrees(a) for a in w.twists]
    joints = [{"joint": 1, "theta_deg": None, "free": True}]
    for k, t in enumerate(w.interior_joints, start=2):
        joints.append({"joint": k, "theta_deg": math.degrees(t), "free": False})
    joints.append({"joint": 4, "theta_deg": None, "free": True})
    return {
        "label": w.label,
        "twists_deg": twists_deg,
        "twists_display": [f"{d:.1f}" for d in twists_deg],
        "joints": joints,
        "alpha_4": "undefined",
        "mirror_couplings": [list(p) for p in w.isotropic_couplings],
        "member_count": len(w.members),
        "members": [
            {"solution": m.solution_index, "ordering": list(m.ordering), "joint_signs": list(m.joint_signs)}
            for m in w.members
        ],
    }


def wrist_catalog_document(wrists, solutions) -> dict:
    """Document with the eight wrist classes and both symmetry-map tables."""
    return {
        "schema_version": SCHEMA_VERSION,
        "metadata": _metadata(),
        "classes": [_class_entry(w) for w in wrists],
        "antipodal_maps": [
            {"source": m.source_index, "subset": list(m.subset), "target": m.target_index}
            for m in antipodal_map_table(solutions)
        ],
        "reflection_maps": [
            {"source": m.source_index, "operation": m.operation, "target": m.target_index}
            for m in reflection_map_table(solutions)
        ],
    }


def wrist_catalog_table(wrists) -> str:
    """Human-readable summary of the eight wrist classes."""
    lines = ["label  alpha_1  alpha_2  alpha_3  theta_2  theta_3   members"]
    for w in wrists:
        tw = [f"{math.degrees(a):7.1f}" for a in w.twists]
        jj = [f"{math.degrees(t):7.1f}" for t in w.interior_joints]
        lines.append(f"  {w.label}   " + " ".join(tw) + "  " + " ".join(jj) + f"   {len(w.members):4d}")
    lines.append("alpha_4 undefined; theta_1 and theta_4 free (isotropy holds for all their values)")
    return "\n".join(lines) + "\n"


def _report_dict(report: IsotropyReport) -> dict:
    return {
        "singular_values": list(report.singular_values),
        "sigma": report.sigma,
        "condition_number": report.condition_number,
        "is_isotropic": report.is_isotropic,
    }


def posture_document(label: str, theta_1_deg: float, theta_4_deg: float, geometry) -> dict:
    """Document with axes, link frames and isotropy data at a posture."""
    axes = geometry.axes.array
    dots = [float(axes[k] @ axes[k + 1]) for k in range(len(axes) - 1)]
    return {
        "schema_version": SCHEMA_VERSION,
        "metadata": _metadata(),
        "class": label,
        "theta_1_deg": theta_1_deg,
        "theta_4_deg": theta_4_deg,
        "axes": [list(map(float, a)) for a in axes],
        "frames": [[list(map(float, row)) for row in f] for f in geometry.frames],
        "consecutive_dot_products": dots,
        "isotropy": _report_dict(geometry.report),
    }


def posture_obj_lines(geometry) -> str:
    """Plain line-segment geometry: 'v x y z' vertices, 'l i j' segments.

    One segment per joint axis, from the wrist center to the axis tip on
    the unit sphere, for consumption by external 3-D viewers.
    """
    lines = ["v 0 0 0"]
    for a in geometry.axes.array:
        lines.append("v " + " ".join(repr(float(v)) for v in a))
    for k in range(geometry.axes.n):
        lines.append(f"l 1 {k + 2}")
    return "\n".join(lines) + "\n"


def platonic_document(kind: PlatonicSolid) -> dict:
    """n, sigma^2 = n/3, sigma and the vertex list for one Platonic solid."""
    ps = platonic_vertices(kind)
    iso = isotropy_of(second_moment(ps))
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind.name,
        "n": kind.n,
        "sigma_sq": iso.sigma_sq,
        "sigma": math.sqrt(iso.sigma_sq),
        "isotropic": iso.isotropic,
        "vertices": [list(map(float, v)) for v in ps.array],
        "footnote": PLATONIC_FOOTNOTE,
    }


def platonic_table(kind: PlatonicSolid) -> str:
    doc = platonic_document(kind)
    lines = [
        f"{doc['kind']}: n = {doc['n']}, sigma^2 = n/3 = {doc['sigma_sq']:.12g}, sigma = {doc['sigma']:.12g}",
        "vertices:",
    ]
    for v in doc["vertices"]:
        lines.append("  [" + ", ".join(f"{c: .15f}" for c in v) + "]")
    lines.append("note: " + doc["footnote"])
    return "\n".join(lines) + "\n"

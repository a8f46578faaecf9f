"""JSON surface and certificate documents."""

import json
import math

from .collars import (DisjointnessCertificate, PairRecord, cone_collar_width,
                      geodesic_collar_width)
from .surface import ConeSurface, Slot


class DocumentError(ValueError):
    """The document is not well-formed JSON of the expected shape."""


def parse_surface(doc):
    """Build a :class:`ConeSurface` from a decoded surface document.

    Cone angles in the document are full angles 2*phi.  Structural problems
    that are not shape errors (bad references, angles out of range) are left
    for :func:`conecollar.surface.validate_surface` to report.
    """
    if not isinstance(doc, dict):
        raise DocumentError("surface document must be a JSON object")
    try:
        genus = doc["genus"]
        angles = doc["cone_angles"]
        curves = doc["curves"]
        pants = doc["pants"]
    except KeyError as exc:
        raise DocumentError(f"missing key {exc.args[0]!r}") from None
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
        raise DocumentError("genus must be a nonnegative integer")
    if not isinstance(angles, list) or not all(_is_number(a) for a in angles):
        raise DocumentError("cone_angles must be a list of numbers")
    if not isinstance(curves, list) or not isinstance(pants, list):
        raise DocumentError("curves and pants must be lists")

    ids, lengths = [], []
    for c in curves:
        if not isinstance(c, dict) or "id" not in c or "length" not in c:
            raise DocumentError(f"curve entry needs 'id' and 'length': {c!r}")
        if not isinstance(c["id"], str) or not _is_number(c["length"]):
            raise DocumentError(f"bad curve entry {c!r}")
        if c["id"] in ids:
            raise DocumentError(f"duplicate curve id {c['id']!r}")
        ids.append(c["id"])
        lengths.append(float(c["length"]))
    index = {cid: k for k, cid in enumerate(ids)}

    slots = []
    for p in pants:
        if not isinstance(p, dict) or not isinstance(p.get("boundaries"), list):
            raise DocumentError(f"pants entry needs a 'boundaries' list: {p!r}")
        row = []
        for ref in p["boundaries"]:
            if not isinstance(ref, str):
                raise DocumentError(f"boundary reference must be a string: {ref!r}")
            if ref.startswith("cone:"):
                try:
                    row.append(Slot("cone", int(ref[5:])))
                except ValueError:
                    raise DocumentError(f"bad cone reference {ref!r}") from None
            else:
                row.append(Slot("curve", index.get(ref, -1)))
        slots.append(tuple(row))
    return ConeSurface(genus, [0.5 * float(a) for a in angles], lengths, slots, ids)


def load_surface(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(str(exc)) from exc
    return parse_surface(doc)


def surface_to_doc(s):
    def ref(slot):
        return f"cone:{slot.index}" if slot.kind == "cone" else s.curve_ids[slot.index]

    return {
        "genus": s.genus,
        "cone_angles": [2.0 * phi for phi in s.half_angles],
        "curves": [{"id": cid, "length": x} for cid, x in zip(s.curve_ids, s.lengths)],
        "pants": [{"boundaries": [ref(sl) for sl in p]} for p in s.pants],
    }


def widths_table(s):
    phi_max = s.phi_max
    return {
        "phi_max": phi_max,
        "geodesic": [{"id": cid, "length": x, "width": geodesic_collar_width(x, phi_max)}
                     for cid, x in zip(s.curve_ids, s.lengths)],
        "cone": [{"index": l, "cone_angle": 2.0 * phi, "width": cone_collar_width(phi)}
                 for l, phi in enumerate(s.half_angles)],
    }


def certificate_to_doc(s, cert):
    return {
        "phi_max": cert.phi_max,
        "passed": cert.passed,
        "min_margin": cert.min_margin if cert.records else None,
        "records": [r.to_dict() for r in cert.records],
        "widths": widths_table(s),
    }


def certificate_from_doc(doc):
    cert = DisjointnessCertificate(doc["phi_max"])
    for r in doc["records"]:
        cert.records.append(PairRecord(r["pants"], r["kind"], tuple(r["pair"]),
                                       r["inequality"], r["lhs"], r["rhs"]))
    return cert


def _is_number(x):
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)

"""JSON interchange.  All payloads are deterministic: sorted keys, canonical
coefficient strings, no timestamps; files round-trip bit-exactly.
"""

from __future__ import annotations

import json

from .cyclotomic import cyc_from_json, cyc_to_json
from .hopf import Element, HopfAlgebraData
from .linalg import Matrix


def _vec_to_json(vec):
    return [cyc_to_json(c) for c in vec]


def _vec_from_json(arr):
    return [cyc_from_json(o) for o in arr]


def matrix_to_json(m: Matrix):
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[cyc_to_json(c) for c in row] for row in m.entries],
    }


def matrix_from_json(obj, conductor):
    entries = [[cyc_from_json(c) for c in row] for row in obj["entries"]]
    return Matrix(obj["rows"], obj["cols"], conductor, entries)


def hopf_to_json(h: HopfAlgebraData) -> dict:
    mult = []
    for i in range(h.dim):
        for j in range(h.dim):
            d = h.mult[i][j]
            if not d:
                continue  # zero products omitted
            vec = [h.zero()] * h.dim
            for k, c in d.items():
                vec[k] = c
            mult.append([i, j, _vec_to_json(vec)])
    comult = []
    for i in range(h.dim):
        for (j, k, c) in h.comult[i]:
            comult.append([i, j, k, cyc_to_json(c)])
    return {
        "dim": h.dim,
        "conductor": h.conductor,
        "labels": list(h.labels),
        "unit": _vec_to_json(h.unit),
        "counit": _vec_to_json(h.counit),
        "mult": mult,
        "comult": comult,
        "antipode": matrix_to_json(h.antipode),
    }


def hopf_from_json(obj: dict) -> HopfAlgebraData:
    dim = int(obj["dim"])
    conductor = int(obj["conductor"])
    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    for i, j, vec in obj["mult"]:
        coeffs = _vec_from_json(vec)
        mult[i][j] = {k: c for k, c in enumerate(coeffs) if not c.is_zero()}
    comult = [[] for _ in range(dim)]
    for i, j, k, c in obj["comult"]:
        comult[i].append((j, k, cyc_from_json(c)))
    return HopfAlgebraData(
        dim=dim,
        conductor=conductor,
        labels=list(obj["labels"]),
        mult=mult,
        unit=_vec_from_json(obj["unit"]),
        comult=comult,
        counit=_vec_from_json(obj["counit"]),
        antipode=matrix_from_json(obj["antipode"], conductor),
    )


def candidate_to_json(cd) -> dict:
    out = {
        "grouplikes": [_vec_to_json(g.coeffs) for g in cd.grouplikes],
        "grouplike_labels": list(cd.grouplike_labels),
        "expected": _expected_to_json(cd.expected),
        "simples": [
            {"label": m.label, "dim": m.dim,
             "action": [matrix_to_json(a) for a in m.action]}
            for m in cd.simples
        ],
        "dual_blocks": [[_vec_to_json(e.coeffs) for e in blk] for blk in cd.dual_blocks],
    }
    if cd.skew_witness is not None:
        out["skew_witness"] = [_vec_to_json(e.coeffs) for e in cd.skew_witness]
    return out


def _expected_to_json(expected):
    out = {}
    for k, v in expected.items():
        out[k] = v
    return out


def candidate_from_json(obj: dict, h: HopfAlgebraData):
    from .catalog import CandidateData
    from .repsolver import RepModule

    cd = CandidateData()
    cd.grouplikes = [Element(h, _vec_from_json(v)) for v in obj["grouplikes"]]
    cd.grouplike_labels = list(obj["grouplike_labels"])
    cd.expected = dict(obj["expected"])
    cd.simples = [
        RepModule(m["label"], int(m["dim"]),
                  [matrix_from_json(a, h.conductor) for a in m["action"]])
        for m in obj["simples"]
    ]
    cd.dual_blocks = [[Element(h, _vec_from_json(v)) for v in blk]
                      for blk in obj["dual_blocks"]]
    if "skew_witness" in obj:
        cd.skew_witness = tuple(Element(h, _vec_from_json(v)) for v in obj["skew_witness"])
    return cd


def dump_json(obj, path):
    with open(path, "w") as fh:
        json.dump(obj, fh, sort_keys=True, indent=1)
        fh.write("\n")


def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def report_to_json(rep) -> dict:
    return {
        "dim": rep.dim,
        "conductor": rep.conductor,
        "radical_dim": rep.radical_dim,
        "coradical_dim": rep.coradical_dim,
        "filtration_dims": rep.filtration_dims,
        "grouplike_count": rep.grouplike_count,
        "grouplike_orders": rep.grouplike_orders,
        "tr_s2": cyc_to_json(rep.tr_s2),
        "semisimple": rep.semisimple,
        "cosemisimple": rep.cosemisimple,
        "chevalley": rep.chevalley,
        "chevalley_witness": rep.chevalley_witness,
        "antipode_order": rep.antipode_order,
        "s_squared_order": rep.s_squared_order,
        "distinguished_grouplike_index": rep.distinguished_grouplike_index,
        "distinguished_grouplike_label": rep.distinguished_grouplike_label,
        "skew_primitive_dims": rep.skew_primitive_dims,
        "certificates": rep.certificates,
    }

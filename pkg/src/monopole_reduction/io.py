"""JSON job files and result objects (schema "mrk/1").

Canonical form is ``json.dumps(obj, sort_keys=True, separators=(",", ":"))``;
a canonical job file survives load/dump byte for byte.
"""
import json
from dataclasses import dataclass, field

from .arith import format_rational
from .errors import InputError
from .lattice import IntersectionLattice
from .manifold import FourManifold, GaugeSetup, SWDatum

SCHEMA = "mrk/1"
OPTION_KEYS = {"max_level": int, "keep_zero_sw": bool, "validate": bool, "format": str}


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


def _int_list(value, what):
    if not isinstance(value, list):
        raise InputError(f"{what} must be an array of integers")
    return [_int(v, what) for v in value]


def _vector(value, lattice, what):
    coords = _int_list(value, what)
    if len(coords) != lattice.rank:
        raise InputError(f"{what} has {len(coords)} coordinates, lattice rank is {lattice.rank}")
    return lattice.vector(coords)


def _require(d, key, where):
    if not isinstance(d, dict):
        raise InputError(f"{where} must be a JSON object")
    if key not in d:
        raise InputError(f"{where} is missing {key!r}")
    return d[key]


# manifold / gauge / SW data

def manifold_to_dict(m):
    return {
        "euler": m.euler,
        "signature": m.signature,
        "b1": m.b1,
        "bplus": m.bplus,
        "gram": [list(row) for row in m.lattice.gram],
        "labels": {name: list(v.coords) for name, v in m.labels.items()},
        "simply_connected": m.simply_connected,
    }


def manifold_from_dict(d):
    gram = _require(d, "gram", "manifold")
    if not isinstance(gram, list):
        raise InputError("manifold.gram must be an array of arrays")
    lattice = IntersectionLattice([_int_list(row, "manifold.gram row") for row in gram])
    labels = d.get("labels", {})
    if not isinstance(labels, dict):
        raise InputError("manifold.labels must be an object")
    sc = d.get("simply_connected", False)
    if not isinstance(sc, bool):
        raise InputError("manifold.simply_connected must be a boolean")
    return FourManifold(
        euler=_int(_require(d, "euler", "manifold"), "euler"),
        signature=_int(_require(d, "signature", "manifold"), "signature"),
        b1=_int(_require(d, "b1", "manifold"), "b1"),
        bplus=_int(_require(d, "bplus", "manifold"), "bplus"),
        lattice=lattice,
        labels={k: _vector(v, lattice, f"label {k!r}") for k, v in labels.items()},
        simply_connected=sc,
    )


def gauge_to_dict(g):
    return {"c1W": list(g.c1W.coords), "c1E": list(g.c1E.coords), "c2E": g.c2E}


def gauge_from_dict(d, lattice):
    return GaugeSetup(
        c1W=_vector(_require(d, "c1W", "gauge"), lattice, "gauge.c1W"),
        c1E=_vector(_require(d, "c1E", "gauge"), lattice, "gauge.c1E"),
        c2E=_int(_require(d, "c2E", "gauge"), "gauge.c2E"),
    )


def sw_to_list(data):
    return [{"K": list(d.K.coords), "sw": d.sw} for d in data]


def sw_from_list(items, lattice):
    if not isinstance(items, list):
        raise InputError("sw_data must be an array")
    return [
        SWDatum(_vector(_require(it, "K", "sw datum"), lattice, "sw datum K"), _int(_require(it, "sw", "sw datum"), "sw"))
        for it in items
    ]


def _check_monomial(d):
    if not isinstance(d, dict):
        raise InputError("monomial must be an object")
    betas = d.get("betas", [])
    if not isinstance(betas, list):
        raise InputError("monomial.betas must be an array")
    for b in betas:
        if not isinstance(b, str):
            _int_list(b, "monomial beta")
    _int(d.get("m", 0), "monomial.m")
    if d.get("n_c1") is not None:
        _int(d["n_c1"], "monomial.n_c1")
    extra = set(d) - {"betas", "m", "n_c1"}
    if extra:
        raise InputError(f"unknown monomial keys: {sorted(extra)}")
    return d


def _check_options(d):
    if not isinstance(d, dict):
        raise InputError("options must be an object")
    for k, v in d.items():
        if k not in OPTION_KEYS:
            raise InputError(f"unknown option {k!r}")
        kind = OPTION_KEYS[k]
        if not isinstance(v, kind) or (kind is int and isinstance(v, bool)):
            raise InputError(f"option {k!r} must be {kind.__name__}")
    return d


@dataclass
class JobConfig:
    manifold: FourManifold
    gauge: GaugeSetup = None
    sw_data: list = None
    monomial: dict = None
    options: dict = field(default_factory=dict)

    @property
    def data(self):
        return self.sw_data or []


def job_from_dict(d):
    if not isinstance(d, dict):
        raise InputError("job config must be a JSON object")
    if d.get("schema") != SCHEMA:
        raise InputError(f"expected \"schema\": \"{SCHEMA}\", got {d.get('schema')!r}")
    extra = set(d) - {"schema", "manifold", "gauge", "sw_data", "monomial", "options"}
    if extra:
        raise InputError(f"unknown top-level keys: {sorted(extra)}")
    m = manifold_from_dict(_require(d, "manifold", "job config"))
    return JobConfig(
        manifold=m,
        gauge=gauge_from_dict(d["gauge"], m.lattice) if "gauge" in d else None,
        sw_data=sw_from_list(d["sw_data"], m.lattice) if "sw_data" in d else None,
        monomial=_check_monomial(d["monomial"]) if "monomial" in d else None,
        options=_check_options(d.get("options", {})),
    )


def job_to_dict(job):
    out = {"schema": SCHEMA, "manifold": manifold_to_dict(job.manifold)}
    if job.gauge is not None:
        out["gauge"] = gauge_to_dict(job.gauge)
    if job.sw_data is not None:
        out["sw_data"] = sw_to_list(job.sw_data)
    if job.monomial is not None:
        out["monomial"] = job.monomial
    if job.options:
        out["options"] = job.options
    return out


def loads_job(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    return job_from_dict(d)


def dumps_job(job):
    return dumps(job_to_dict(job))


# results

def reducible_to_dict(r):
    return {"K": list(r.K.coords), "L1": list(r.L1.coords), "sw": r.sw, "level": r.level, "d_s": r.d_s}


def pairing_to_dict(result):
    rows = []
    for r, v in result.per_reducible:
        row = reducible_to_dict(r)
        row["value"] = format_rational(v)
        rows.append(row)
    return {"value": format_rational(result.value), "per_reducible": rows}


def finding_to_dict(f):
    return {"severity": f.severity, "code": f.code, "message": f.message}

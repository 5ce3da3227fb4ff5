"""Strict, deterministic readers and writers for the file formats.

All numbers are serialized with 17 significant digits (doubles round-trip
exactly), writers emit canonical compact JSON with a fixed key order, and
readers reject NaN/Inf, wrong types and unknown fields with the offending
field named.  write(read(file)) is the identity on files produced here.
"""

import json
import math

import numpy as np

from .fuchsian import FuchsianRep
from .invisible import AchronalSample
from .models import ConformalAdsPoint, EinPoint
from .quadratic import Isometry, certify_isometry


class SchemaError(ValueError):
    """Input file violates a format schema."""


def format_float(x):
    x = float(x)
    if not math.isfinite(x):
        raise SchemaError("non-finite number cannot be serialized")
    s = f"{x:.17g}"
    if "." not in s and "e" not in s and "E" not in s:
        s += ".0"
    return s


def dumps(doc):
    """Canonical compact JSON text (insertion-ordered keys, 17g floats)."""
    if isinstance(doc, bool):
        return "true" if doc else "false"
    if doc is None:
        return "null"
    if isinstance(doc, (int, np.integer)):
        return str(int(doc))
    if isinstance(doc, (float, np.floating)):
        return format_float(doc)
    if isinstance(doc, str):
        return json.dumps(doc)
    if isinstance(doc, (list, tuple, np.ndarray)):
        return "[" + ", ".join(dumps(v) for v in doc) + "]"
    if isinstance(doc, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}"
                               for k, v in doc.items()) + "}"
    raise SchemaError(f"cannot serialize {type(doc).__name__}")


def write_json(path, doc):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc) + "\n")


def _reject_constant(name):
    raise SchemaError(f"non-finite JSON constant {name!r} rejected")


def loads(text):
    return json.loads(text, parse_constant=_reject_constant)


def read_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return loads(fh.read())
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON ({exc})") from None


def _check_keys(doc, keys, ctx):
    if not isinstance(doc, dict):
        raise SchemaError(f"{ctx}: expected an object")
    for k in doc:
        if k not in keys:
            raise SchemaError(f'{ctx}: unknown field "{k}"')
    for k in keys:
        if k not in doc:
            raise SchemaError(f'{ctx}: missing field "{k}"')


def _int(doc, field, ctx):
    v = doc[field]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(f'{ctx}.{field}: expected an integer')
    return v


def _float(doc, field, ctx):
    v = doc[field]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SchemaError(f'{ctx}.{field}: expected a number')
    v = float(v)
    if not math.isfinite(v):
        raise SchemaError(f'{ctx}.{field}: non-finite number')
    return v


def _float_list(doc, field, ctx, length=None):
    v = doc[field]
    if not isinstance(v, list):
        raise SchemaError(f'{ctx}.{field}: expected a list of numbers')
    out = []
    for i, item in enumerate(v):
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise SchemaError(f'{ctx}.{field}[{i}]: expected a number')
        item = float(item)
        if not math.isfinite(item):
            raise SchemaError(f'{ctx}.{field}[{i}]: non-finite number')
        out.append(item)
    if length is not None and len(out) != length:
        raise SchemaError(f'{ctx}.{field}: expected length {length}, '
                          f'got {len(out)}')
    return np.array(out, dtype=float)


# vector / matrix --------------------------------------------------------

def vector_to_doc(coords):
    coords = np.asarray(coords, dtype=float)
    return {"n": int(coords.shape[0] - 2), "coords": coords.tolist()}


def vector_from_doc(doc, ctx="vector"):
    _check_keys(doc, ("n", "coords"), ctx)
    n = _int(doc, "n", ctx)
    if n < 1:
        raise SchemaError(f"{ctx}.n: need n >= 1")
    return _float_list(doc, "coords", ctx, length=n + 2)


def matrix_to_doc(m):
    m = m.matrix if isinstance(m, Isometry) else np.asarray(m, dtype=float)
    return {"n": int(m.shape[0] - 2),
            "rows": [row.tolist() for row in m]}


def matrix_from_doc(doc, ctx="matrix"):
    _check_keys(doc, ("n", "rows"), ctx)
    n = _int(doc, "n", ctx)
    rows = doc["rows"]
    if not isinstance(rows, list) or len(rows) != n + 2:
        raise SchemaError(f"{ctx}.rows: expected {n + 2} rows")
    return np.stack([_float_list({"r": row}, "r", f"{ctx}.rows[{i}]",
                                 length=n + 2)
                     for i, row in enumerate(rows)], axis=0)


# conformal / einstein points -------------------------------------------

def conformal_to_doc(c):
    return {"theta": float(c.theta_total), "disk": c.disk.tolist()}


def conformal_from_doc(doc, ctx="conformal_point"):
    _check_keys(doc, ("theta", "disk"), ctx)
    return ConformalAdsPoint(_float(doc, "theta", ctx),
                             _float_list(doc, "disk", ctx), 0)


def ein_to_doc(e):
    return {"theta": float(e.theta), "y": e.y.tolist()}


def ein_from_doc(doc, ctx="ein_point"):
    _check_keys(doc, ("theta", "y"), ctx)
    return EinPoint(_float(doc, "theta", ctx), _float_list(doc, "y", ctx))


# limit sets -------------------------------------------------------------

def limit_set_to_doc(sample):
    return {"n": int(sample.n),
            "points": [{"y": y.tolist(), "theta": float(t)}
                       for y, t in zip(sample.ys, sample.thetas)]}


def limit_set_from_doc(doc, require_achronal=True, ctx="limit_set"):
    _check_keys(doc, ("n", "points"), ctx)
    n = _int(doc, "n", ctx)
    pts = doc["points"]
    if not isinstance(pts, list) or len(pts) < 2:
        raise SchemaError(f"{ctx}.points: need at least two points")
    ys, thetas = [], []
    for i, p in enumerate(pts):
        pctx = f"{ctx}.points[{i}]"
        _check_keys(p, ("y", "theta"), pctx)
        ys.append(_float_list(p, "y", pctx, length=n))
        thetas.append(_float(p, "theta", pctx))
    try:
        return AchronalSample(np.stack(ys, axis=0), np.array(thetas),
                              require_achronal=require_achronal)
    except ValueError as exc:
        raise SchemaError(f"{ctx}: {exc}") from None


def read_limit_set(path, require_achronal=True):
    return limit_set_from_doc(read_json(path), require_achronal)


def write_limit_set(path, sample):
    write_json(path, limit_set_to_doc(sample))


# representations --------------------------------------------------------

def rep_to_doc(rep):
    return {"n": int(rep.n),
            "V": rep.v_axis.tolist(),
            "generators": [{"rows": [row.tolist() for row in g.matrix]}
                           for g in rep.generators]}


def rep_from_doc(doc, ctx="representation", tol=1e-8):
    _check_keys(doc, ("n", "V", "generators"), ctx)
    n = _int(doc, "n", ctx)
    v = _float_list(doc, "V", ctx, length=n + 2)
    gens_doc = doc["generators"]
    if not isinstance(gens_doc, list) or not gens_doc:
        raise SchemaError(f"{ctx}.generators: need at least one generator")
    gens = []
    for i, g in enumerate(gens_doc):
        gctx = f"{ctx}.generators[{i}]"
        _check_keys(g, ("rows",), gctx)
        m = matrix_from_doc({"n": n, "rows": g["rows"]}, gctx)
        try:
            gens.append(certify_isometry(m, tol))
        except ValueError as exc:
            raise SchemaError(f"{gctx}: {exc}") from None
    return FuchsianRep(v, tuple(gens))


def read_rep(path):
    return rep_from_doc(read_json(path))


def write_rep(path, rep):
    write_json(path, rep_to_doc(rep))


# loxodromic data / witnesses -------------------------------------------

def loxodromic_to_doc(data):
    return {"attracting": data.attracting.rep.tolist(),
            "repelling": data.repelling.rep.tolist(),
            "T": float(data.translation_length)}


def witness_to_doc(pair, inner_value):
    return {"pair": [int(pair[0]), int(pair[1])],
            "inner": float(inner_value)}


# CSV --------------------------------------------------------------------

def format_cell(v):
    if isinstance(v, str):
        return v
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format_float(v)


def write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(format_cell(v) for v in row) + "\n")

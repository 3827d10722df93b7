"""JSON load/save for every artifact.

Documents carry ``"format": "localslices/1"`` and a ``"type"``.  Output is
canonical (sorted keys, two-space indent, trailing newline); numbers are
integers and rationals are strings such as ``"-3/2"``, so round trips are
byte-identical.
"""

import json
from importlib import resources

from .errors import ValidationError
from .linalg import fraction_str, to_fraction
from .presentation import Presentation
from .quiver import Arrow, Quiver
from .translation import Point, TranslationQuiver

FORMAT = "localslices/1"


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _field(doc, key, pointer, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise ValidationError(f"missing field {key!r}", pointer=pointer or "/")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise ValidationError(f"field {key!r} has the wrong type", pointer=f"{pointer}/{key}")
    return value


def _header(doc, expected, pointer=""):
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object", pointer=pointer or "/")
    fmt = doc.get("format", FORMAT)
    if fmt != FORMAT:
        raise ValidationError(f"unsupported format {fmt!r}", pointer=f"{pointer}/format")
    kind = _field(doc, "type", pointer, str)
    if kind != expected:
        raise ValidationError(f"expected a {expected!r} document, got {kind!r}", pointer=f"{pointer}/type")


# -- quivers ------------------------------------------------------------------


def quiver_to_json(q):
    return {
        "format": FORMAT, "type": "quiver", "vertices": list(q.vertices),
        "arrows": [{"id": a.id, "from": a.source, "to": a.target} for a in q.arrows],
    }


def quiver_from_json(doc, pointer=""):
    _header(doc, "quiver", pointer)
    verts = _field(doc, "vertices", pointer, list)
    arrows = []
    for i, a in enumerate(_field(doc, "arrows", pointer, list)):
        p = f"{pointer}/arrows/{i}"
        arrows.append(Arrow(str(_field(a, "id", p)), str(_field(a, "from", p)), str(_field(a, "to", p))))
    try:
        return Quiver(verts, arrows)
    except ValidationError as err:
        raise ValidationError(str(err).split(" (at ")[0], pointer=pointer + (err.pointer or "")) from None


def translation_to_json(g, named_sets=None):
    doc = {
        "format": FORMAT, "type": "translation-quiver", "kind": g.kind,
        "points": [
            dict({"id": p.id, "orbit": p.orbit, "level": p.level}, **({"label": g.labels[p.id]} if p.id in g.labels else {}))
            for p in g.points
        ],
        "arrows": [list(a) for a in g.arrows],
        "tau": [list(t) for t in g.tau],
        "rank_hint": g.rank_hint,
        "marked": sorted(g.marked),
        "frontier": sorted(g.frontier),
    }
    if named_sets:
        doc["named_sets"] = {k: list(v) for k, v in named_sets.items()}
    return doc


def translation_from_json(doc, pointer="", check=True):
    _header(doc, "translation-quiver", pointer)
    points, labels = [], {}
    for i, p in enumerate(_field(doc, "points", pointer, list)):
        pp = f"{pointer}/points/{i}"
        pid = str(_field(p, "id", pp))
        level = _field(p, "level", pp)
        if not isinstance(level, int):
            raise ValidationError("level must be an integer", pointer=f"{pp}/level")
        points.append(Point(pid, str(_field(p, "orbit", pp)), level))
        if "label" in p:
            labels[pid] = str(p["label"])
    for key in ("arrows", "tau"):
        for i, pair in enumerate(_field(doc, key, pointer, list)):
            if not (isinstance(pair, list) and len(pair) == 2):
                raise ValidationError("expected a [source, target] pair", pointer=f"{pointer}/{key}/{i}")
    try:
        g = TranslationQuiver(
            _field(doc, "kind", pointer, str), points, doc["arrows"], doc["tau"], rank_hint=doc.get("rank_hint"),
            marked=doc.get("marked", ()), frontier=doc.get("frontier", ()), labels=labels,
        )
    except ValidationError as err:
        raise ValidationError(str(err).split(" (at ")[0], pointer=pointer + (err.pointer or ""), point=err.point) from None
    if check:
        bad = g.structure_violations()
        if bad:
            raise ValidationError(f"translation quiver axioms fail at point {bad[0]!r}", pointer=pointer or "/", point=bad[0])
    return g


def named_sets(doc):
    return {k: list(v) for k, v in doc.get("named_sets", {}).items()}


# -- presentations ----------------------------------------------------------------


def presentation_to_json(p):
    q = quiver_to_json(p.quiver)
    return {
        "format": FORMAT, "type": "presentation",
        "quiver": {"vertices": q["vertices"], "arrows": q["arrows"]},
        "relations": [[{"coeff": fraction_str(c), "path": list(path)} for path, c in r] for r in p.relations],
        "nilpotency": p.nilpotency,
    }


def presentation_from_json(doc, pointer=""):
    _header(doc, "presentation", pointer)
    qdoc = dict(_field(doc, "quiver", pointer, dict), type="quiver")
    q = quiver_from_json(qdoc, f"{pointer}/quiver")
    rels = []
    for i, r in enumerate(_field(doc, "relations", pointer, list)):
        terms = []
        for j, t in enumerate(r):
            tp = f"{pointer}/relations/{i}/{j}"
            try:
                c = to_fraction(_field(t, "coeff", tp))
            except (ValueError, ZeroDivisionError):
                raise ValidationError("coefficient is not a rational", pointer=f"{tp}/coeff") from None
            terms.append((tuple(_field(t, "path", tp, list)), c))
        rels.append(terms)
    try:
        return Presentation(q, rels, doc.get("nilpotency"))
    except (ValidationError, KeyError) as err:
        msg = str(err).split(" (at ")[0]
        ptr = getattr(err, "pointer", None)
        raise ValidationError(msg, pointer=pointer + (ptr or "/relations")) from None


# -- derived models and algebras --------------------------------------------------------


def model_to_json(m):
    q = quiver_to_json(m.quiver)

    def table(s):
        return {"offset": dict(s.offset), "target": dict(s.target)}

    return {
        "format": FORMAT, "type": "derived-model",
        "quiver": {"vertices": q["vertices"], "arrows": q["arrows"]},
        "window": [m.lo, m.hi],
        "proj_pos": dict(m.proj_pos), "inj_pos": dict(m.inj_pos),
        "nu": table(m.nu), "shift": table(m.shift), "F": table(m.F),
        "dim_vectors": {k: list(v) for k, v in m.dim_vectors.items()},
    }


def model_from_json(doc, pointer=""):
    """Rebuild the model from its quiver and check every stored table against it."""
    from .derived import build_model

    _header(doc, "derived-model", pointer)
    q = quiver_from_json(dict(_field(doc, "quiver", pointer, dict), type="quiver"), f"{pointer}/quiver")
    m = build_model(q)
    window = _field(doc, "window", pointer, list)
    if len(window) != 2 or not all(isinstance(x, int) for x in window) or window[0] >= window[1]:
        raise ValidationError("window must be [lo, hi] with lo < hi", pointer=f"{pointer}/window")
    m.lo, m.hi = window
    fresh = model_to_json(m)
    for key in ("proj_pos", "inj_pos", "nu", "shift", "F", "dim_vectors"):
        if _field(doc, key, pointer) != fresh[key]:
            raise ValidationError(f"stored {key} disagrees with the quiver", pointer=f"{pointer}/{key}")
    return m


def algebra_to_json(alg):
    basis = [[b.source, b.target, b.grade, b.index] for b in alg.basis]
    consts = [[i, j, [[k, fraction_str(c)] for k, c in terms]] for (i, j), terms in sorted(alg.table.items()) if terms]
    return {
        "format": FORMAT, "type": "cluster-tilted-algebra",
        "model": model_to_json(alg.model),
        "tilting": list(alg.tilting),
        "basis": basis,
        "structure_constants": consts,
        "arrow_grades": dict(alg.arrow_grades),
        "arrow_basis": {a: v.index(1) for a, v in alg.arrow_vectors.items()},
        "presentation": presentation_to_json(alg.presentation),
        "mod_quiver": translation_to_json(alg.mod_quiver),
    }


def algebra_from_json(doc, pointer=""):
    """Recompute the algebra from model and tilting object; stored data must match exactly."""
    from .tilted import ClusterTiltedAlgebra

    _header(doc, "cluster-tilted-algebra", pointer)
    m = model_from_json(_field(doc, "model", pointer, dict), f"{pointer}/model")
    alg = ClusterTiltedAlgebra(m, _field(doc, "tilting", pointer, list))
    fresh = algebra_to_json(alg)
    for key in ("tilting", "basis", "structure_constants", "arrow_grades", "arrow_basis", "presentation", "mod_quiver"):
        if _field(doc, key, pointer) != fresh[key]:
            raise ValidationError(f"stored {key} disagrees with the recomputed algebra", pointer=f"{pointer}/{key}")
    return alg


def slices_to_json(slices):
    return {"format": FORMAT, "type": "slice-list", "slices": [list(s) for s in slices]}


def slice_from_json(doc, pointer=""):
    """A single slice: a bare list of ids or a ``{"type": "slice", "points": [...]}`` document."""
    if isinstance(doc, list):
        pts = doc
    else:
        _header(doc, "slice", pointer)
        pts = _field(doc, "points", pointer, list)
    for i, p in enumerate(pts):
        if not isinstance(p, str):
            raise ValidationError("point ids must be strings", pointer=f"{pointer}/{i}" if isinstance(doc, list) else f"{pointer}/points/{i}")
    return list(pts)


LOADERS = {
    "quiver": quiver_from_json,
    "translation-quiver": translation_from_json,
    "presentation": presentation_from_json,
    "derived-model": model_from_json,
    "cluster-tilted-algebra": algebra_from_json,
}

DUMPERS = {
    Quiver: quiver_to_json,
    TranslationQuiver: translation_to_json,
    Presentation: presentation_to_json,
}


def to_json(obj):
    from .derived import DerivedModel
    from .tilted import ClusterTiltedAlgebra

    if isinstance(obj, DerivedModel):
        return model_to_json(obj)
    if isinstance(obj, ClusterTiltedAlgebra):
        return algebra_to_json(obj)
    for cls, fn in DUMPERS.items():
        if isinstance(obj, cls):
            return fn(obj)
    raise ValidationError(f"cannot serialise {type(obj).__name__}")


def from_json(doc):
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object", pointer="/")
    kind = doc.get("type")
    if kind not in LOADERS:
        raise ValidationError(f"unknown document type {kind!r}", pointer="/type")
    return LOADERS[kind](doc)


def load(path):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as err:
            raise ValidationError(f"{path}: invalid JSON ({err.msg})", pointer="/") from None
    return from_json(doc)


def save(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(to_json(obj)))


def load_raw(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# -- shipped golden data ---------------------------------------------------------------


def golden_raw(name):
    """Raw JSON of a shipped data file (``figure1``, ``figure2``, ``figure3``, ``example51``)."""
    text = resources.files("localslices").joinpath("data").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def golden_text(name):
    return resources.files("localslices").joinpath("data").joinpath(f"{name}.json").read_text(encoding="utf-8")

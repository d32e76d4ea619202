"""JSON encodings of scalars, polynomials, elements, presentations and reports."""

from __future__ import annotations

import json
from fractions import Fraction

from .core import BiPoly, Element, Presentation
from .errors import InputError
from .poly import Poly
from .scalar import QuadExt, Scalar, as_scalar, format_scalar, quad


def scalar_to_json(x: Scalar) -> dict:
    if isinstance(x, QuadExt):
        return {"a": format_scalar(x.a), "b": format_scalar(x.b), "D": x.D}
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def scalar_from_json(obj) -> Scalar:
    from .parser import parse_scalar

    if isinstance(obj, bool):
        raise InputError(f"not a scalar: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        return parse_scalar(obj)
    if isinstance(obj, dict):
        try:
            if "D" in obj:
                return quad(scalar_from_json(obj["a"]), scalar_from_json(obj["b"]), int(obj["D"]))
            den = int(obj.get("den", 1))
            if den == 0:
                raise InputError("zero denominator")
            return Fraction(int(obj["num"]), den)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad scalar object {obj!r}") from exc
    raise InputError(f"not a scalar: {obj!r}")


def poly_to_json(p: Poly) -> list:
    return [scalar_to_json(c) for c in p.coeffs]


def poly_from_json(obj) -> Poly:
    from .parser import parse_poly

    if isinstance(obj, str):
        return parse_poly(obj)
    if isinstance(obj, list):
        return Poly(scalar_from_json(c) for c in obj)
    raise InputError(f"not a polynomial: {obj!r}")


def element_to_json(x: Element) -> dict:
    from .core import monomial_sort_key

    return {
        "terms": [
            {"u": a, "h": b, "d": c, "coef": scalar_to_json(x.terms[(a, b, c)])}
            for (a, b, c) in sorted(x.terms, key=monomial_sort_key, reverse=True)
        ],
        "text": str(x),
    }


def element_from_json(obj, pres: Presentation) -> Element:
    try:
        return Element(
            pres,
            {
                (int(t["u"]), int(t["h"]), int(t["d"])): scalar_from_json(t["coef"])
                for t in obj["terms"]
            },
        )
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad element object: {exc}") from exc


def bipoly_to_json(p: BiPoly, names=("h", "k")) -> dict:
    return {
        "terms": [
            {names[0]: i, names[1]: j, "coef": scalar_to_json(v)}
            for (i, j), v in sorted(p.terms.items(), reverse=True)
        ],
        "text": p.format(names),
    }


def presentation_to_json(p: Presentation) -> dict:
    return {
        "f": poly_to_json(p.f),
        "r": scalar_to_json(p.r),
        "s": scalar_to_json(p.s),
        "gamma": scalar_to_json(p.gamma),
        "text": str(p),
    }


def presentation_from_json(obj) -> Presentation:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise InputError(f"preset is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("preset must be a JSON object")
    missing = {"f", "r", "s"} - set(obj)
    if missing:
        raise InputError(f"preset is missing {', '.join(sorted(missing))}")
    unknown = set(obj) - {"f", "r", "s", "gamma"}
    if unknown:
        raise InputError(f"unknown preset keys: {', '.join(sorted(unknown))}")
    return Presentation(
        poly_from_json(obj["f"]),
        scalar_from_json(obj["r"]),
        scalar_from_json(obj["s"]),
        scalar_from_json(obj.get("gamma", 0)),
    )


def images_to_json(images) -> dict:
    return {name: element_to_json(x) for name, x in zip("duh", images)}


def automorphism_to_json(a) -> dict:
    return {
        "label": a.label,
        "params": [scalar_to_json(p) for p in a.params],
        "text": a.describe(),
        "images": images_to_json(a.images),
        "inverse_images": images_to_json(a.inverse_images),
    }


def _json_value(v):
    if isinstance(v, (Fraction, QuadExt)):
        return scalar_to_json(v)
    if isinstance(v, int):
        return scalar_to_json(as_scalar(v))
    return v


def schema_to_json(g) -> dict:
    return {
        "kind": g.kind,
        "params": list(g.params),
        "constraints": list(g.constraints),
        "fixed": {k: _json_value(v) for k, v in g.fixed.items()},
        "finite_sets": {k: [scalar_to_json(x) for x in v] for k, v in g.finite_sets.items()},
    }


def group_to_json(desc, witness: dict | None = None) -> dict:
    data = {
        "tau": desc.tau,
        "epsilon": desc.epsilon,
        "rho": desc.rho,
        "generators": [schema_to_json(g) for g in desc.generators],
        "presentation": presentation_to_json(desc.pres),
    }
    if desc.path is not None:
        data["path"] = desc.path
        data["externally_justified"] = desc.externally_justified
        data["r"] = scalar_to_json(desc.roots[0])
        data["s"] = scalar_to_json(desc.roots[1])
    return {
        "case": desc.case_tag,
        "group": desc.symbolic_group,
        "case_name": desc.case_name,
        "data": data,
        "witness": witness or {},
    }


def report(case: str, data: dict, witness: dict | None = None) -> dict:
    return {"case": case, "data": data, "witness": witness or {}}

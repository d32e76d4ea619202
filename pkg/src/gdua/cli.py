"""Command-line front end.

Exit codes: 0 success, 1 mathematical precondition failure (or a failed
morphism check), 2 syntax/configuration error, 3 undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import autgroup, invariants
from .core import Presentation, check_morphism
from .errors import GduaError, InputError, PreconditionError, UndecidedError
from .jsonio import (
    automorphism_to_json,
    bipoly_to_json,
    element_to_json,
    group_to_json,
    images_to_json,
    poly_to_json,
    presentation_from_json,
    report,
    scalar_to_json,
)
from .parser import parse_element, parse_scalar
from .scalar import DEFAULT_SEARCH_BOUND, format_scalar

EXIT_OK, EXIT_PRECONDITION, EXIT_INPUT, EXIT_UNDECIDED, EXIT_INTERNAL = 0, 1, 2, 3, 4


@dataclass
class SessionConfig:
    presentation: Presentation | None
    search_bound: int = DEFAULT_SEARCH_BOUND
    oracle_degree: int = 4
    output: str = "human"

    def __post_init__(self):
        if self.search_bound < 1 or self.oracle_degree < 1:
            raise InputError("bounds must be positive")

    @property
    def pres(self) -> Presentation:
        if self.presentation is None:
            raise InputError("this command needs --preset")
        return self.presentation


@dataclass
class Outcome:
    human: str
    data: dict
    code: int = EXIT_OK


class _Parser(argparse.ArgumentParser):
    def _parse_optional(self, arg_string):
        # "-3/4", "-d*u", "-h - d" are arguments; only "-h" and "--..." are options
        if arg_string.startswith("-") and len(arg_string) > 1 and arg_string[1] != "-" and arg_string != "-h":
            return None
        return super()._parse_optional(arg_string)

    def error(self, message):
        raise InputError(message)


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _read_expr(text: str) -> str:
    return sys.stdin.read().strip() if text == "-" else text


def _read_preset(text: str):
    if text.startswith("@"):
        try:
            with open(text[1:]) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read preset file: {exc}") from exc
    return presentation_from_json(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_nf(cfg: SessionConfig, args) -> Outcome:
    x = parse_element(_read_expr(args.expr), cfg.pres)
    return Outcome(str(x), {"element": element_to_json(x)})


def cmd_mul(cfg: SessionConfig, args) -> Outcome:
    x = parse_element(_read_expr(args.left), cfg.pres)
    y = parse_element(_read_expr(args.right), cfg.pres)
    z = x * y
    return Outcome(str(z), {"element": element_to_json(z)})


def cmd_conformal(cfg: SessionConfig, args) -> Outcome:
    c = invariants.conformal(cfg.pres)
    data = {
        "conformal": c.conformal,
        "normalized_f": poly_to_json(c.normalized_f),
        "normalized_f_text": str(c.normalized_f),
        "frame": str(c.frame),
    }
    if c.conformal:
        data.update(
            g=poly_to_json(c.g),
            g_text=str(c.g),
            g_original=poly_to_json(c.g_original),
            g_original_text=str(c.g_original),
            k=element_to_json(c.k_def),
        )
        lines = [
            "conformal: yes",
            f"f~ = {c.normalized_f}",
            f"g = {c.g}",
            f"k = {c.k_def}   (in {c.frame})",
        ]
        return Outcome("\n".join(lines), report("conformal", data))
    lines = ["conformal: no", f"reason: {c.reason}"]
    return Outcome("\n".join(lines), report("not_conformal", data, {"reason": c.reason}))


def cmd_invariants(cfg: SessionConfig, args) -> Outcome:
    pres = cfg.pres
    tau, eps = invariants.tau_epsilon(pres, cfg.search_bound)
    rho = invariants.rho_reduced(pres)
    data = {"tau": tau, "epsilon": eps, "rho": rho}
    lines = [f"tau = {tau}", f"epsilon = {eps}", f"rho = {'undefined (f = 0)' if rho is None else rho}"]
    case = "independent" if tau == 0 else "dependent"
    return Outcome("\n".join(lines), report(case, data))


def cmd_center(cfg: SessionConfig, args) -> Outcome:
    c = invariants.center(cfg.pres, cfg.search_bound)
    scan = invariants.central_scan(cfg.pres, cfg.oracle_degree, cfg.search_bound)
    data = {"tag": c.tag, "tau": c.tau, "epsilon": c.epsilon}
    witness = {
        "scan_degree": cfg.oracle_degree,
        "scan_basis": [bipoly_to_json(p) for p in scan],
    }
    if c.generator is None:
        lines = ["center: K (scalars only)"]
    else:
        data["generator"] = element_to_json(c.generator)
        data["generator_hk"] = bipoly_to_json(c.generator_hk)
        lines = [
            f"center: K[{c.generator_hk.format(('h', 'k'))}]",
            f"generator = {c.generator}",
        ]
    lines.append(
        f"scan (h, k degrees <= {cfg.oracle_degree}): "
        + ", ".join(p.format(("h", "k")) for p in scan)
    )
    return Outcome("\n".join(lines), report(c.tag, data, witness))


def cmd_is_normal(cfg: SessionConfig, args) -> Outcome:
    t = parse_element(_read_expr(args.expr), cfg.pres)
    res = invariants.is_normal(cfg.pres, t, cfg.search_bound)
    if res.normal:
        data = {"normal": True, "lambda": scalar_to_json(res.lam), "mu": scalar_to_json(res.mu)}
        lines = ["normal: yes", f"lambda = {format_scalar(res.lam)}", f"mu = {format_scalar(res.mu)}"]
        try:
            cl = invariants.classify_normal(cfg.pres, t, cfg.search_bound)
        except PreconditionError:
            cl = None
        if cl is not None:
            data["classification"] = {
                "scalar_part": scalar_to_json(cl.scalar_part),
                "h_power": cl.h_power,
                "k_power": cl.k_power,
                "q_case": cl.q_case,
                "q": bipoly_to_json(cl.q),
                "q_coefficients": [scalar_to_json(v) for v in cl.q_coefficients],
                "ladder": None if cl.ladder is None else {"kind": cl.ladder[0], "n": cl.ladder[1]},
            }
            ladder = "" if cl.ladder is None else f" * {'x' if cl.ladder[0] == 'XPower' else 'y'}^{cl.ladder[1]}"
            lines.append(
                f"shape: {format_scalar(cl.scalar_part)} * h^{cl.h_power} * k^{cl.k_power}"
                f" * ({cl.q.format(('h', 'k'))}){ladder}   [q case {cl.q_case}]"
            )
        return Outcome("\n".join(lines), report("normal", data))
    witness = {"reason": res.reason}
    if res.witness is not None:
        witness["residual"] = element_to_json(res.witness)
    lines = ["normal: no", f"reason: {res.reason}"]
    if res.witness is not None:
        lines.append(f"residual: {res.witness}")
    return Outcome("\n".join(lines), report("not_normal", {"normal": False}, witness))


def _classification_lines(desc) -> list[str]:
    lines = [f"case ({desc.case_tag}): {desc.symbolic_group}"]
    rho = "undefined" if desc.rho is None else desc.rho
    lines.append(f"tau = {desc.tau}, epsilon = {desc.epsilon}, rho = {rho}")
    lines.append("generators:")
    for g in desc.generators:
        extra = []
        if g.fixed:
            extra.append(", ".join(f"{k} = {v if isinstance(v, str) else format_scalar(v)}" for k, v in g.fixed.items()))
        if g.constraints:
            extra.append("; ".join(g.constraints))
        for k, vals in g.finite_sets.items():
            extra.append(f"{k} in {{{', '.join(format_scalar(v) for v in vals)}}}")
        tail = f"  [{' | '.join(extra)}]" if extra else ""
        lines.append(f"  {g.kind}({', '.join(g.params)}){tail}")
    return lines


def cmd_aut_classify(cfg: SessionConfig, args) -> Outcome:
    desc = autgroup.classify_aut_group(cfg.pres, cfg.search_bound)
    clauses = autgroup.clause_predicates(cfg.pres, cfg.search_bound)
    return Outcome("\n".join(_classification_lines(desc)), group_to_json(desc, {"clauses": clauses}))


SCHEMAS = {
    "torus": lambda p, ps, b: autgroup.make_torus(p, *ps, bound=b),
    "psi-plus": lambda p, ps, b: autgroup.make_psi_plus(p, *ps, bound=b),
    "psi-minus": lambda p, ps, b: autgroup.make_psi_minus(p, *ps, bound=b),
    "cyclic": lambda p, ps, b: autgroup.make_cyclic_phi(p, *ps, bound=b),
}
SCHEMA_ARITY = {"torus": (2, 3), "psi-plus": (4,), "psi-minus": (2,), "cyclic": (0,)}


def _build(cfg: SessionConfig, schema: str, params: list[str]):
    if schema not in SCHEMAS:
        raise InputError(f"unknown schema {schema!r}; choose from {', '.join(SCHEMAS)}")
    if len(params) not in SCHEMA_ARITY[schema]:
        raise InputError(f"{schema} takes {' or '.join(map(str, SCHEMA_ARITY[schema]))} parameters")
    values = [parse_scalar(p) for p in params]
    return SCHEMAS[schema](cfg.pres, values, cfg.search_bound)


def _images_lines(images) -> list[str]:
    return [f"  {n} -> {x}" for n, x in zip("duh", images)]


def cmd_aut_make(cfg: SessionConfig, args) -> Outcome:
    a = _build(cfg, args.schema, args.params)
    lines = [a.describe(), "images:", *_images_lines(a.images), "inverse:", *_images_lines(a.inverse_images)]
    data = automorphism_to_json(a)
    data["verified"] = a.verify()
    return Outcome("\n".join(lines), data)


def cmd_aut_apply(cfg: SessionConfig, args) -> Outcome:
    if not args.items:
        raise InputError("aut-apply needs a schema and an expression")
    *params, expr = args.items
    a = _build(cfg, args.schema, params)
    x = parse_element(_read_expr(expr), cfg.pres)
    y = a.apply(x)
    return Outcome(str(y), {"automorphism": a.describe(), "element": element_to_json(y)})


def cmd_aut_check(cfg: SessionConfig, args) -> Outcome:
    P = cfg.pres
    images = tuple(parse_element(_read_expr(t), P) for t in (args.d_img, args.u_img, args.h_img))
    res = check_morphism(P, P, images)
    data = {"images": images_to_json(images)}
    if res.ok:
        return Outcome("morphism: yes", report("morphism", data))
    witness = {k: element_to_json(v) for k, v in res.residuals.items()}
    lines = ["morphism: no", *(f"residual of {k} relation: {v}" for k, v in res.residuals.items())]
    return Outcome("\n".join(lines), report("not_morphism", data, witness), EXIT_PRECONDITION)


def cmd_downup(cfg: SessionConfig, args) -> Outcome:
    alpha, beta, gamma = (parse_scalar(t) for t in (args.alpha, args.beta, args.gamma))
    desc = autgroup.classify_downup(alpha, beta, gamma, cfg.search_bound)
    r, s = desc.roots
    lines = _classification_lines(desc)
    lines.insert(1, f"r = {format_scalar(r)}, s = {format_scalar(s)}; {desc.path}"
                 + (" (externally justified)" if desc.externally_justified else ""))
    witness = {"beta_is_minus_one": beta == -1, "gamma_is_zero": gamma == 0}
    return Outcome("\n".join(lines), group_to_json(desc, witness))


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", default=argparse.SUPPRESS,
                        help='presentation as JSON, e.g. \'{"f":[0,1],"r":"2","s":"3","gamma":"0"}\', or @file')
    common.add_argument("--bound", type=_positive, default=argparse.SUPPRESS,
                        help="search bound for multiplicative dependence (default 64)")
    common.add_argument("--oracle-degree", type=_positive, default=argparse.SUPPRESS,
                        help="degree bound of brute-force scans (default 4)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON")

    parser = _Parser(prog="gdua", description="Generalized down-up algebras L(f, r, s, gamma).",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("nf", cmd_nf, "normal form of an expression").add_argument("expr")
    p = add("mul", cmd_mul, "product of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    add("conformal", cmd_conformal, "conformality and g")
    add("invariants", cmd_invariants, "tau, epsilon and rho")
    add("center", cmd_center, "the center")
    add("is-normal", cmd_is_normal, "normality test").add_argument("expr")
    add("aut-classify", cmd_aut_classify, "classify the automorphism group")
    p = add("aut-make", cmd_aut_make, "build an automorphism: torus|psi-plus|psi-minus|cyclic")
    p.add_argument("schema")
    p.add_argument("params", nargs="*")
    p = add("aut-apply", cmd_aut_apply, "apply an automorphism: SCHEMA [PARAMS...] EXPR")
    p.add_argument("schema")
    p.add_argument("items", nargs="*")
    p = add("aut-check", cmd_aut_check, "check that images of d, u, h define a morphism")
    p.add_argument("d_img")
    p.add_argument("u_img")
    p.add_argument("h_img")
    p = add("downup", cmd_downup, "automorphism group of the down-up algebra A(alpha, beta, gamma)")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("gamma")
    return parser


def _emit(text_or_obj, as_json: bool, stream) -> None:
    if as_json:
        stream.write(json.dumps(text_or_obj, indent=2, sort_keys=False) + "\n")
    else:
        stream.write(text_or_obj + "\n")


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        want_json = getattr(args, "json", False)
        preset = getattr(args, "preset", None)
        cfg = SessionConfig(
            _read_preset(preset) if preset is not None else None,
            getattr(args, "bound", DEFAULT_SEARCH_BOUND),
            getattr(args, "oracle_degree", 4),
            "json" if want_json else "human",
        )
        out = args.func(cfg, args)
    except PreconditionError as exc:
        return _fail(exc, EXIT_PRECONDITION, want_json)
    except (InputError, ZeroDivisionError) as exc:
        return _fail(exc, EXIT_INPUT, want_json)
    except UndecidedError as exc:
        return _fail(exc, EXIT_UNDECIDED, want_json)
    except GduaError as exc:
        return _fail(exc, EXIT_INTERNAL, want_json)
    if want_json:
        _emit(out.data, True, sys.stdout)
    else:
        _emit(out.human, False, sys.stdout)
    return out.code


def _fail(exc: Exception, code: int, as_json: bool) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    if as_json:
        _emit(payload, True, sys.stdout)
    else:
        sys.stderr.write(f"error: {exc}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status 1 means the input could not be parsed; 2 means a mathematical
precondition failed (the message names it).
"""

from __future__ import annotations

import argparse
import contextlib
import itertools
import json
import re
import sys

import mpmath

from . import connection as conn_mod
from .complex_structure import NotComplexStructure, NotIntegrable, classify_complex_type
from .ddbar import weak_ddbar_check
from .forms import Form, e, format_form
from .hermitian import (DomainError, FamilyDescriptor, NotHermitian, PositivityError,
                        adapted_hermitian, adapted_psi, balanced_check, build_family,
                        i_lambda_adapted, identify_algebra)
from .holonomy import ambrose_singer_closure, gamma_coordinates, holonomy_json
from .lie import StructureParseError, parse_structure_equations, serialize
from .scalars import float_backend, fmt, parse_rational
from .strominger import (InstantonError, build_instanton_A_lambda, build_instanton_A_tau,
                         external_instanton, required_tau2, strominger_report)
SCHEMA = "1"


class ParseError(Exception):
    pass


class PreconditionError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


# ---- scalars ------------------------------------------------------------------

_FUNC = re.compile(r"^\s*(sqrt|root4)\((.*)\)\s*$")


def scalar(text, backend):
    """Rational string on the exact backend; on the float backend also
    ``sqrt(p/q)``, ``root4(p/q)`` and decimals."""
    text = str(text).strip()
    try:
        if backend == "exact":
            return parse_rational(text)
        m = _FUNC.match(text)
        if m:
            inner = scalar(m.group(2), backend)
            return mpmath.sqrt(inner) if m.group(1) == "sqrt" else mpmath.root(inner, 4)
        if "/" in text:
            q = parse_rational(text)
            return mpmath.mpf(q.numerator) / q.denominator
        return mpmath.mpf(text)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ParseError(f"cannot parse scalar {text!r}") from None


# ---- inputs ---------------------------------------------------------------------

FAMILY_KEYS = ("rho", "delta", "b", "b2", "s", "t", "u", "r", "sign", "lambda")


def _family_descriptor(params, backend):
    fam = params["family"]
    kw = {"family": fam}
    if params.get("rho") is not None:
        kw["rho"] = int(params["rho"])
    for key in ("delta", "b2"):
        if params.get(key) is not None:
            kw["b2"] = scalar(params[key], backend)
    if params.get("b") is not None:
        kw["b2"] = scalar(params["b"], backend) ** 2
    for key in ("s", "t", "r"):
        if params.get(key) is not None:
            kw[key] = scalar(params[key], backend)
    if params.get("u") is not None:
        parts = str(params["u"]).split(",")
        if len(parts) != 2:
            raise ParseError("--u expects 'u1,u2'")
        kw["u1"], kw["u2"] = (scalar(p, backend) for p in parts)
    if params.get("sign") is not None:
        sg = str(params["sign"])
        if sg not in ("+", "-", "1", "-1", "+1"):
            raise ParseError("--sign expects + or -")
        kw["sign"] = -1 if sg.startswith("-") else 1
    return FamilyDescriptor(**kw)


class Structure:
    """The algebra plus Hermitian data the analyses run on."""

    def __init__(self, algebra, H, desc=None, label=""):
        self.algebra = algebra
        self.H = H
        self.desc = desc
        self.label = label

    @property
    def family(self):
        return None if self.desc is None else self.desc.family


def load_structure(params, backend) -> Structure:
    if params.get("family") and params.get("equations"):
        raise ParseError("--family and --equations are mutually exclusive")
    if params.get("equations"):
        src = params["equations"]
        try:
            with open(src) as fh:
                text = fh.read()
        except OSError:
            text = src.replace(";", "\n")
        try:
            g = parse_structure_equations(text)
        except StructureParseError as ex:
            raise ParseError(str(ex)) from None
        return Structure(g, adapted_hermitian(), label="equations")
    fam = params.get("family")
    if not fam:
        raise ParseError("one of --family or --equations is required")
    if fam == "I_lambda":
        lam = params.get("lambda")
        if lam is None:
            raise ParseError("I_lambda needs --lambda")
        g, H = i_lambda_adapted(scalar(lam, backend))
        return Structure(g, H, label=f"I_lambda({lam})")
    desc = _family_descriptor(params, backend)
    fs = build_family(desc)
    return Structure(fs.algebra, fs.H, desc, fam)


# ---- reports ------------------------------------------------------------------

def _bool(b):
    return "yes" if b else "no"


def report_classify(st: Structure, params, backend):
    J = st.H.J
    jtype = classify_complex_type(st.algebra, J)
    bal = balanced_check(st.algebra, st.H) if jtype != "non-integrable" else None
    out = {"algebra": identify_algebra(st.algebra), "J": jtype,
           "balanced": None if bal is None else bal.balanced}
    if bal is not None and not bal.balanced:
        out["residual"] = format_form(bal.residual)
    text = (f"algebra: {out['algebra']}, J: {jtype}, "
            f"balanced: {'n/a' if bal is None else _bool(bal.balanced)}")
    return out, [text]


def report_build(st: Structure, params, backend):
    eqs = serialize(st.algebra)
    out = {"equations": eqs.splitlines(), "F": format_form(st.H.F), "psi": format_form(adapted_psi())}
    if st.desc is not None:
        out["descriptor"] = st.desc.to_json()
    lines = eqs.splitlines() + [f"F = {out['F']}", f"Psi = {out['psi']}"]
    return out, lines


def _gamma_text(f: Form):
    co = gamma_coordinates(f)
    if co is None:
        return format_form(f)
    terms = [f"{fmt(c)}*gamma{k + 1}" for k, c in enumerate(co) if c]
    return " + ".join(terms) if terms else "0"


def report_connection(st: Structure, params, backend):
    kind = params.get("kind") or "bismut"
    g, H = st.algebra, st.H
    bis, T = conn_mod.bismut_connection(g, H)
    if kind == "bismut":
        c = bis
    elif kind == "chern":
        c = conn_mod.chern_connection(g, H)
    elif kind == "levi-civita":
        c = conn_mod.levi_civita_forms(g)
    else:
        raise ParseError(f"unknown connection kind {kind!r}")
    C = conn_mod.curvature(g, c)
    R = {f"{p}{q}": _gamma_text(r) for (p, q), r in C.endomorphisms().items() if r.coeffs}
    out = {"connection": c.to_json(), "torsion": format_form(T), "dT": format_form(g.d(T)),
           "curvature": R, "trace": format_form(C.trace),
           "metric": conn_mod.preserves_metric(c), "J_parallel": conn_mod.preserves_J(c, H)}
    lines = [f"connection: {kind}", f"T = {out['torsion']}", f"dT = {out['dT']}"]
    for i in range(1, 7):
        for j in range(i + 1, 7):
            if c(i, j).coeffs:
                lines.append(f"sigma^{i}_{j} = {format_form(c(i, j))}")
    for k, v in R.items():
        lines.append(f"R(e{k[0]},e{k[1]}) = {v}")
    lines.append(f"tr Omega^Omega = {out['trace']}")
    return out, lines


def report_holonomy(st: Structure, params, backend):
    b, _ = conn_mod.bismut_connection(st.algebra, st.H)
    if params.get("kind") == "chern":
        b = conn_mod.chern_connection(st.algebra, st.H)
    S = ambrose_singer_closure(st.algebra, b)
    out = holonomy_json(S)
    lines = [f"dim: {out['dim']}", f"label: {out['label']}"]
    lines += ["basis: " + ", ".join(" + ".join(row) for row in out["basis"])] if out["basis"] else []
    return out, lines


def report_ddbar(st: Structure, params, backend):
    r = weak_ddbar_check(st.algebra, st.H.J)
    out = {"verdict": r.verdict, "strong": "holds" if r.strong_holds else "fails",
           "dim_partial_13": r.dim_partial_13, "dim_ddbar_12": r.dim_ddbar_12, "dim_V": r.dim_V}
    if r.witness is not None:
        out["witness"] = format_form(r.witness, symbol="w", labels=_THETA)
        out["witness_dbar"] = format_form(r.witness_dbar, symbol="w", labels=_THETA)
    lines = [f"weak ddbar-lemma: {r.verdict}", f"strong containment: {out['strong']}",
             f"dim d(L13) = {r.dim_partial_13}, dim ddbar(L12) = {r.dim_ddbar_12}"]
    if r.witness is not None:
        lines.append(f"witness phi = {out['witness']}")
    return out, lines


_THETA = {1: "1", 2: "2", 3: "3", 4: "1b", 5: "2b", 6: "3b"}


def report_strominger(st: Structure, params, backend):
    from .hermitian import FamilyStructure
    if st.desc is None:
        raise PreconditionError("strominger needs a family descriptor")
    fs = FamilyStructure(st.desc, st.algebra, st.H)
    which = params.get("kind") or "bismut"
    if params.get("lambda") is not None:
        A = build_instanton_A_lambda(fs, scalar(params["lambda"], backend))
    elif params.get("tau") is not None:
        A = build_instanton_A_tau(fs, scalar(params["tau"], backend))
    elif params.get("external_trace") is not None:
        A = external_instanton(e(1, 2, 3, 4) * scalar(params["external_trace"], backend))
    elif fs.desc.family == "F217":
        sol = required_tau2(fs, which)
        out = {"connection": which, "tau_solve": sol.status,
               "alpha_prime": None if sol.alpha is None else fmt(sol.alpha),
               "tau2": None if sol.tau2 is None else fmt(sol.tau2)}
        return out, [f"connection: {which}", f"status: {sol.status}",
                     f"alpha': {out['alpha_prime']}", f"tau^2: {out['tau2']}"]
    else:
        raise ParseError("choose an instanton with --lambda, --tau or --external-trace")
    rep = strominger_report(fs, A, which)
    out = rep.to_json()
    out["instanton"] = A.tag
    lines = [f"connection: {which}",
             f"(a) holonomy in su(3): {_bool(rep.holonomy_in_su3)}",
             f"(b) balanced: {_bool(rep.balanced)}",
             f"(c) instanton: {_bool(rep.instanton_ok and rep.instanton_nonflat)}"
             + ("" if rep.instanton_verified else " (external, unverified)"),
             f"(d) anomaly: {rep.anomaly.status}",
             f"alpha': {out['alpha_prime']}",
             f"heterotic: {'true' if rep.heterotic else 'false'}"]
    return out, lines


REPORTS = {
    "classify": report_classify,
    "build": report_build,
    "connection": report_connection,
    "holonomy": report_holonomy,
    "ddbar": report_ddbar,
    "strominger": report_strominger,
}


# ---- sweep ------------------------------------------------------------------------

def _row(st: Structure, params, backend):
    from .complex_structure import is_abelian_structure
    g, H = st.algebra, st.H
    b, _ = conn_mod.bismut_connection(g, H)
    row = {"abelian": is_abelian_structure(g, H.J),
           "balanced": balanced_check(g, H).balanced,
           "ddbar": weak_ddbar_check(g, H.J).verdict,
           "hol_dim": ambrose_singer_closure(g, b).dim}
    if st.desc is not None and (params.get("lambda") is not None or params.get("tau") is not None):
        rep, _ = report_strominger(st, params, backend)
        row["alpha_prime"] = rep["alpha_prime"]
        row["anomaly"] = rep["d_anomaly"]
    return row


def run_sweep(params, backend):
    axes = []
    for spec in params.get("vary") or []:
        if "=" not in spec:
            raise ParseError(f"--vary expects name=v1,v2,..., got {spec!r}")
        name, vals = spec.split("=", 1)
        name = name.strip().replace("-", "_")
        if name not in FAMILY_KEYS + ("tau",):
            raise ParseError(f"cannot vary {name!r}")
        values = [v for v in vals.split(",") if v.strip()]
        axes.append((name, values))
    rows = []
    if not axes or any(not vals for _, vals in axes):
        return {"rows": rows}, []
    names = [n for n, _ in axes]
    for combo in itertools.product(*[vals for _, vals in axes]):
        p = dict(params)
        p.update(zip(names, combo))
        st = load_structure(p, backend)
        row = {n: v for n, v in zip(names, combo)}
        row.update(_row(st, p, backend))
        rows.append(row)
    lines = []
    if rows:
        cols = list(rows[0])
        lines.append("\t".join(cols))
        for r in rows:
            lines.append("\t".join(_cell(r.get(c)) for c in cols))
    return {"rows": rows}, lines


def _cell(v):
    if isinstance(v, bool):
        return _bool(v)
    return "-" if v is None else str(v)


# ---- entry point ----------------------------------------------------------------

def build_parser():
    p = _Parser(prog="nilbalanced", description="Balanced Hermitian geometry on 6-dimensional Lie algebras")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in list(REPORTS) + ["sweep"]:
        sp = sub.add_parser(name)
        sp.add_argument("--family", help="F214..F218 or I_lambda")
        sp.add_argument("--equations", help="structure equations: file path or inline text (';' separates lines)")
        sp.add_argument("--rho")
        sp.add_argument("--delta")
        sp.add_argument("--b")
        sp.add_argument("--b2")
        sp.add_argument("--s")
        sp.add_argument("--t")
        sp.add_argument("--u", help="u1,u2")
        sp.add_argument("--r")
        sp.add_argument("--sign")
        sp.add_argument("--lambda", dest="lambda")
        sp.add_argument("--tau")
        sp.add_argument("--external-trace", dest="external_trace",
                        help="e^{1234}-coefficient of an external instanton trace")
        sp.add_argument("--kind", help="bismut, chern or levi-civita")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--backend", choices=("exact", "float"), default="exact")
        sp.add_argument("--dps", type=int, default=60)
        if name == "sweep":
            sp.add_argument("--vary", action="append", help="name=v1,v2,... (repeatable)")
    return p


PRECONDITION_ERRORS = (DomainError, PositivityError, NotHermitian, NotIntegrable,
                       NotComplexStructure, InstantonError, conn_mod.NotOrthonormal,
                       PreconditionError)


def run(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    with contextlib.redirect_stderr(err):
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as ex:
            return ex.code
    params = vars(args)
    backend = args.backend
    try:
        if backend == "float":
            with float_backend(args.dps):
                payload, lines = _dispatch(params, backend)
        else:
            payload, lines = _dispatch(params, backend)
    except ParseError as ex:
        print(f"parse error: {ex}", file=err)
        return 1
    except PRECONDITION_ERRORS as ex:
        print(f"precondition failed: {ex}", file=err)
        return 2
    if args.json:
        doc = {"schema": SCHEMA, "command": args.command}
        doc.update(payload)
        print(json.dumps(doc, sort_keys=True, default=str), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return 0


def _dispatch(params, backend):
    cmd = params["command"]
    if cmd == "sweep":
        return run_sweep(params, backend)
    st = load_structure(params, backend)
    return REPORTS[cmd](st, params, backend)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

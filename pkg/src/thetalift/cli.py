"""Command-line frontend.

Exit codes: 0 on success, 1 for malformed or invalid input, 2 when a
verification check fails.  Artifacts go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from xml.sax.saxutils import escape

from . import ggp, llc, theta
from .core import ComponentChar, HalfInt, HCParam, ParameterError, ThetaContext, UnitaryChar, build_param

GRID_LIMIT = 512
CHECKS = ("conservation", "tower", "duality", "llc-roundtrip", "appendix-j")

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2


class InputError(Exception):
    """Bad user input; the message is shown as is."""


# -- parameter files ---------------------------------------------------------


class ParamFile:
    """A parsed parameter file; ``eta`` is None when some sign is missing."""

    def __init__(self, phi, signs: dict, source: str):
        self.phi = phi
        self.signs = signs
        self.source = source
        missing = [a for a in phi.alphas if a not in signs]
        self.missing = missing
        self.eta = None if missing else ComponentChar.from_signs(phi.alphas, [signs[a] for a in phi.alphas])

    def require_eta(self) -> ComponentChar:
        if self.eta is None:
            shown = ", ".join(f"two_alpha={a.doubled}" for a in self.missing)
            raise InputError(f"{self.source}: eta is required for this command but missing for {shown}")
        return self.eta

    def context(self, nu: int) -> ThetaContext:
        return ThetaContext(self.phi, self.require_eta(), nu)


def _int_field(entry: dict, key: str, where: str, required: bool = True, default=None) -> int:
    if key not in entry:
        if required:
            raise InputError(f"{where}.{key}: missing")
        return default
    value = entry[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError(f"{where}.{key}: expected an integer, got {value!r}")
    return value


def parse_param(text: str, source: str = "<param>") -> ParamFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{source}: top level must be an object")
    unknown = set(doc) - {"n", "relevant", "pairs"}
    if unknown:
        raise InputError(f"{source}: unknown field(s) {sorted(unknown)}")
    n = _int_field(doc, "n", source)
    relevant, signs, pairs = [], {}, []
    for i, entry in enumerate(doc.get("relevant", [])):
        where = f"{source}: relevant[{i}]"
        if not isinstance(entry, dict):
            raise InputError(f"{where}: expected an object")
        alpha = HalfInt(_int_field(entry, "two_alpha", where))
        mult = _int_field(entry, "mult", where, required=False, default=1)
        if mult < 1:
            raise InputError(f"{where}.mult: must be positive, got {mult}")
        relevant.append((alpha, mult))
        if "eta" in entry:
            eta = entry["eta"]
            if eta not in (1, -1) or isinstance(eta, bool):
                raise InputError(f"{where}.eta: expected 1 or -1, got {eta!r}")
            if signs.get(alpha, eta) != eta:
                raise InputError(f"{where}.eta: conflicts with an earlier entry for {alpha}")
            signs[alpha] = eta
    for i, entry in enumerate(doc.get("pairs", [])):
        where = f"{source}: pairs[{i}]"
        if not isinstance(entry, dict):
            raise InputError(f"{where}: expected an object")
        winding = _int_field(entry, "winding", where)
        num = _int_field(entry, "t_num", where, required=False, default=0)
        den = _int_field(entry, "t_den", where, required=False, default=1)
        if den == 0:
            raise InputError(f"{where}.t_den: must be nonzero")
        pairs.append(UnitaryChar(winding, Fraction(num, den)))
    try:
        phi = build_param(n, relevant, pairs)
    except ParameterError as exc:
        raise InputError(f"{source}: {exc}") from None
    stray = [a for a in signs if a not in phi.alphas]
    assert not stray
    return ParamFile(phi, signs, source)


def load_param(path: str) -> ParamFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return parse_param(text, path)


def param_to_json(phi, eta=None) -> dict:
    relevant = []
    for alpha, mult in phi.relevant:
        entry = {"two_alpha": alpha.doubled, "mult": mult}
        if eta is not None:
            entry["eta"] = eta[alpha]
        relevant.append(entry)
    pairs = [
        {"winding": xi.winding, "t_num": xi.radial.numerator, "t_den": xi.radial.denominator}
        for xi in phi.pairs
    ]
    return {"n": phi.n, "relevant": relevant, "pairs": pairs}


def parse_hc(text: str) -> HCParam:
    """Parse ``"6,5,4,-8;3,1,0,-3,-7"``; half-integers are written ``7/2``."""
    blocks = text.split(";")
    if len(blocks) > 2:
        raise InputError(f"HC parameter {text!r}: at most one ';' allowed")
    parsed = []
    for block in blocks:
        items = [x.strip() for x in block.split(",") if x.strip()]
        try:
            parsed.append(tuple(HalfInt.of(x) for x in items))
        except ParameterError as exc:
            raise InputError(f"HC parameter {text!r}: {exc}") from None
    plus, minus = parsed[0], parsed[1] if len(parsed) == 2 else ()
    try:
        return HCParam(plus, minus)
    except ParameterError as exc:
        raise InputError(f"HC parameter {text!r}: {exc}") from None


# -- diagrams ------------------------------------------------------------------


def diagram_model(ctx: ThetaContext, r_max: int, s_max: int) -> list[dict]:
    """Records ``{r, s, nonzero}`` for every cell of the right parity."""
    for name, value in (("rmax", r_max), ("smax", s_max)):
        if not 0 <= value <= GRID_LIMIT:
            raise InputError(f"--{name} must lie in [0, {GRID_LIMIT}], got {value}")
    cells = []
    for s in range(s_max + 1):
        for r in range(r_max + 1):
            if (r + s - ctx.nu) % 2 == 0:
                cells.append({"r": r, "s": s, "nonzero": theta.nonvanishing(ctx, r, s)})
    return cells


def render_ascii(cells: list[dict], r_max: int, s_max: int) -> str:
    grid = [[" "] * (r_max + 1) for _ in range(s_max + 1)]
    for cell in cells:
        grid[cell["s"]][cell["r"]] = "#" if cell["nonzero"] else "."
    return "\n".join("".join(row) for row in reversed(grid)) + "\n"


def render_svg(cells: list[dict], r_max: int, s_max: int, title: str = "") -> str:
    step, margin, radius = 16, 32, 5
    width = margin * 2 + step * r_max
    height = margin * 2 + step * s_max

    def xy(r, s):
        return margin + step * r, height - margin - step * s

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(title)}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    x0, y0 = xy(0, 0)
    x1, y1 = xy(r_max, s_max)
    parts.append(f'<line x1="{x0}" y1="{y0}" x2="{x1 + step // 2}" y2="{y0}" stroke="gray"/>')
    parts.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1 - step // 2}" stroke="gray"/>')
    parts.append(f'<text x="{x1 + step // 2 + 4}" y="{y0 + 4}" font-size="12">r</text>')
    parts.append(f'<text x="{x0 - 4}" y="{y1 - step // 2 - 6}" font-size="12">s</text>')
    for cell in cells:
        x, y = xy(cell["r"], cell["s"])
        fill = "black" if cell["nonzero"] else "white"
        parts.append(
            f'<circle cx="{x}" cy="{y}" r="{radius}" fill="{fill}" stroke="black">'
            f'<title>({cell["r"]}, {cell["s"]})</title></circle>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_diagram(cells: list[dict], r_max: int, s_max: int, fmt: str, title: str = "") -> str:
    if fmt == "json":
        return json.dumps(cells) + "\n"
    if fmt == "ascii":
        return render_ascii(cells, r_max, s_max)
    if fmt == "svg":
        return render_svg(cells, r_max, s_max, title)
    raise InputError(f"unknown format {fmt!r}")


# -- commands ------------------------------------------------------------------


def _fmt_sign(sign: int) -> str:
    return "+" if sign > 0 else "-"


def analyze_report(pf: ParamFile, nu: int) -> str:
    ctx = pf.context(nu)
    inv = theta.invariants(ctx)
    lines = [
        f"n = {ctx.n}",
        f"nu = {nu}",
        f"kappa = {ctx.kappa}",
        f"k = {inv.k}",
        f"(r, s) = ({inv.r}, {inv.s})",
        f"X = {inv.x!r}",
        f"X_inf = {inv.x_inf!r}",
        f"signature = {tuple(llc.signature(ctx.phi, ctx.eta))}",
    ]
    if ctx.phi.is_discrete:
        lines.append(f"HC = {llc.param_to_hc(ctx.phi, ctx.eta)}")
    lines.append("T   C+  C-")
    for T in range(1, ctx.n + 3):
        plus = theta.c_count(inv.x_inf, inv.k, T, 1)
        minus = theta.c_count(inv.x_inf, inv.k, T, -1)
        lines.append(f"{T:<3} {plus:<3} {minus}")
    return "\n".join(lines) + "\n"


def run_checks(pf: ParamFile, nu: int, checks) -> list[tuple[str, str, str]]:
    """Results ``(check, PASS|FAIL|SKIP, detail)`` in the requested order."""
    ctx = pf.context(nu)
    n = ctx.n
    bound = 2 * n + 6
    cells = [(r, s) for r in range(bound + 1) for s in range(bound + 1 - r) if (r + s - nu) % 2 == 0]
    results = []
    for check in checks:
        if check == "conservation":
            rep = theta.conservation_report(ctx)
            ok = rep.holds
            detail = f"m+ = {rep.m_plus}, m- = {rep.m_minus}, sum = {rep.sum}, 2n+2 = {2 * n + 2}"
        elif check == "tower":
            bad = [
                (r, s) for r, s in cells
                if theta.nonvanishing(ctx, r, s) and not theta.nonvanishing(ctx, r + 1, s + 1)
            ]
            ok, detail = not bad, f"{len(bad)} counterexample(s) with r+s <= {bound}"
        elif check == "duality":
            dual = theta.dual_context(ctx)
            bad = [(r, s) for r, s in cells if theta.nonvanishing(ctx, r, s) != theta.nonvanishing(dual, s, r)]
            ok, detail = not bad, f"{len(bad)} counterexample(s) with r+s <= {bound}"
        elif check == "llc-roundtrip":
            twice = llc.contragredient(*llc.contragredient(ctx.phi, ctx.eta))
            ok = twice == (ctx.phi, ctx.eta)
            detail = "contragredient is an involution"
            if ctx.phi.is_discrete:
                back = llc.hc_to_param(llc.param_to_hc(ctx.phi, ctx.eta))
                ok = ok and back == (ctx.phi, ctx.eta)
                detail += "; HC round trip"
        elif check == "appendix-j":
            if not ctx.phi.is_discrete:
                results.append((check, "SKIP", "parameter is not discrete"))
                continue
            hc = llc.param_to_hc(ctx.phi, ctx.eta)
            ok = llc.appendix_j_plus(hc) == ctx.eta
            detail = f"HC = {hc}"
        else:
            raise InputError(f"unknown check {check!r}; choose from {', '.join(CHECKS)}")
        results.append((check, "PASS" if ok else "FAIL", detail))
    return results


def ggp_report(pf_n: ParamFile, pf_n1: ParamFile) -> str:
    try:
        pair = ggp.restriction_distinguished(pf_n.phi, pf_n1.phi)
        conj = ggp.conjecture_signs(pf_n.phi, pf_n1.phi)
    except ParameterError as exc:
        raise InputError(str(exc)) from None

    def signs(eta):
        return "(" + ", ".join(f"{a}:{_fmt_sign(s)}" for a, s in eta.signs) + ")"

    lines = [
        f"restriction pair: U{tuple(pair.sig)} inside U{tuple(pair.sig1)}",
        f"eta  = {signs(pair.eta)}",
        f"eta' = {signs(pair.eta1)}",
        f"relevant pair: {ggp.is_relevant_pair(pair.sig, pair.sig1)}",
        f"epsilon eta  = {signs(conj[0])}",
        f"epsilon eta' = {signs(conj[1])}",
    ]
    for pf, eta, label in ((pf_n, pair.eta, "first"), (pf_n1, pair.eta1, "second")):
        if pf.eta is not None:
            lines.append(f"{label} file is the distinguished member: {pf.eta == eta}")
    for m in ggp.sign_divergence(pf_n.phi, pf_n1.phi):
        lines.append(
            f"distinct counting differs on side {m.side} at {m.exponent}: "
            f"{_fmt_sign(m.counted)} vs {_fmt_sign(m.from_epsilon)}"
        )
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="thetalift", description="Non-vanishing of theta lifts for U(p, q).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_param(p, nu=True):
        p.add_argument("--param", required=True, metavar="FILE", help="JSON parameter file")
        if nu:
            p.add_argument("--nu", type=int, default=0, help="chi_V = chi_nu (default 0)")
        return p

    with_param(sub.add_parser("analyze", help="print the invariants of a parameter"))
    diagram = with_param(sub.add_parser("diagram", help="occurrence diagram"))
    diagram.add_argument("--rmax", type=int, default=14)
    diagram.add_argument("--smax", type=int, default=14)
    diagram.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    first = with_param(sub.add_parser("first-occurrence", help="first occurrence in one tower"))
    first.add_argument("--d", type=int, required=True, help="tower r - s = d")
    convert = sub.add_parser("convert", help="HC string <-> parameter file")
    source = convert.add_mutually_exclusive_group(required=True)
    source.add_argument("--hc", help='e.g. "7/2,5/2;-5/2,-7/2"')
    source.add_argument("--param", metavar="FILE")
    verify = with_param(sub.add_parser("verify", help="run invariant checks"))
    verify.add_argument("--checks", default=",".join(CHECKS), help="comma-separated subset of " + ",".join(CHECKS))
    g = with_param(sub.add_parser("ggp", help="distinguished pair for U(n) inside U(n+1)"), nu=False)
    g.add_argument("--param1", required=True, metavar="FILE", help="parameter of dimension n+1")
    return parser


def dispatch(args, out) -> int:
    if args.command == "analyze":
        out.write(analyze_report(load_param(args.param), args.nu))
    elif args.command == "diagram":
        ctx = load_param(args.param).context(args.nu)
        cells = diagram_model(ctx, args.rmax, args.smax)
        out.write(render_diagram(cells, args.rmax, args.smax, args.format, title=args.param))
    elif args.command == "first-occurrence":
        ctx = load_param(args.param).context(args.nu)
        out.write(f"{theta.first_occurrence(ctx, args.d)}\n")
    elif args.command == "convert":
        if args.hc is not None:
            phi, eta = llc.hc_to_param(parse_hc(args.hc))
            out.write(json.dumps(param_to_json(phi, eta), indent=2) + "\n")
        else:
            pf = load_param(args.param)
            out.write(f"{llc.param_to_hc(pf.phi, pf.require_eta())}\n")
    elif args.command == "verify":
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        failed = False
        for check, status, detail in run_checks(load_param(args.param), args.nu, checks):
            out.write(f"{check}: {status} ({detail})\n")
            failed |= status == "FAIL"
        return EXIT_FAILED if failed else EXIT_OK
    elif args.command == "ggp":
        out.write(ggp_report(load_param(args.param), load_param(args.param1)))
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return dispatch(args, out)
    except (InputError, ParameterError, theta.ParityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

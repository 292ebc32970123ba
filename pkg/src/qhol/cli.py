"""Per-group analysis and the summary tables.

``analyze`` runs the whole pipeline for one catalog spec and returns a
``GroupReport``; ``render`` turns a list of reports into markdown, CSV or
JSON.  Rows are computed in worker processes when ``--threads`` > 1 and
always emitted in catalog order.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields

from . import catalog, forms, iso, regsets, zappa
from .errors import BudgetExceeded, QholError
from .holomorph import build_hol, nhol_split_verdict
from .quasi import build_qhol, families

log = logging.getLogger("qhol")

DEFAULT_COMPLEMENT_CAP = 100_000


@dataclass
class Options:
    budget_nodes: int = regsets.DEFAULT_BUDGET
    complement_cap: int = DEFAULT_COMPLEMENT_CAP
    closed_form_check: bool = False
    nhol: bool = True


@dataclass
class GroupReport:
    spec: str
    display: str
    order: int = 0
    sr: int | None = None
    q: int | None = None
    h: int | None = None
    qhol_verdict: str = "inconclusive"  # group | not-closed | inconclusive
    zs_verdict: str = "inconclusive"  # ZS | not-ZS | inconclusive
    classes: list = field(default_factory=list)
    complements_found: int = 0
    exhaustive: bool = False
    nhol_split: str = "inconclusive"  # split | not-split | inconclusive
    closed_form: str = ""
    notes: list = field(default_factory=list)
    error: str = ""
    timings: dict = field(default_factory=dict, compare=False)

    @property
    def pi_cell(self) -> str:
        if self.zs_verdict == "ZS":
            return ", ".join(self.classes)
        return self.zs_verdict

    def matches_expected(self) -> bool | None:
        exp = catalog.expected_for(self.spec)
        if exp is None:
            return None
        sr, q, h, names = exp
        if (self.sr, self.q, self.h) != (sr, q, h):
            return False
        if names == catalog.NOT_ZS:
            return self.zs_verdict == "not-ZS" and self.exhaustive
        return self.zs_verdict == "ZS" and set(self.classes) == set(names)

    def to_dict(self, timings: bool = False) -> dict:
        d = asdict(self)
        if not timings:
            d.pop("timings")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GroupReport":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})


def _naming_budget(opts: Options) -> int:
    return min(opts.budget_nodes, iso.DEFAULT_BUDGET)


def analyze(spec: str, options: Options | None = None) -> GroupReport:
    opts = options or Options()
    rep = GroupReport(spec, catalog.display_name(spec))
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        rep.timings[name] = round(now - clock, 3)
        clock = now

    try:
        ctx = catalog.build(spec)
        rep.order = ctx.n
        if rep.display == spec:
            rep.display = iso.name_group(ctx.group, _naming_budget(opts))
        hc = build_hol(ctx)
        lap("holomorph")
        fam = families(hc, opts.budget_nodes)
        rep.sr, rep.q, rep.h = len(fam.sr), len(fam.q), len(fam.h)
        lap("families")
        qres = build_qhol(fam.q)
        rep.qhol_verdict = qres.verdict
        lap("qhol")
        if qres.verdict == "group":
            cs = zappa.find_complements(qres.union, max_count=opts.complement_cap,
                                        budget=opts.budget_nodes, symmetry=True)
            rep.zs_verdict = cs.verdict
            rep.exhaustive = cs.exhaustive
            rep.complements_found = len(cs.complements)
            if cs.note:
                rep.notes.append(cs.note)
            if not cs.exhaustive and cs.complements:
                rep.notes.append(f"complement cap {opts.complement_cap} reached; "
                                 "class list may be partial")
            rep.classes = zappa.classify_complements(cs.complements, _naming_budget(opts))
            lap("complements")
        else:
            rep.notes.append("QHol is not closed; no complement search")
        if opts.nhol:
            sv = nhol_split_verdict(hc, opts.budget_nodes)
            rep.nhol_split = sv.status
            if sv.status == "split" and rep.zs_verdict == "ZS" and len(fam.h) > 1:
                M = sv.witness.table()
                ok = zappa.h_part_check(qres.union, cs.complements, fam.gammas("h"), M)
                rep.notes.append(f"H-part of every complement ≅ T(G): {ok}")
            if sv.obstruction is not None:
                ob = sv.obstruction
                rep.notes.append(f"NHol obstruction: coset {ob['index']} of order "
                                 f"{ob['coset_order']} has no element of that order")
            lap("nhol")
        if opts.closed_form_check:
            rep.closed_form = _closed_form(spec, hc, fam)
            lap("closed-form")
    except BudgetExceeded as exc:
        rep.notes.append(f"inconclusive: {exc}")
    except QholError as exc:
        rep.error = f"{type(exc).__name__}: {exc}"
    return rep


def _closed_form(spec: str, hc, fam) -> str:
    m = re.fullmatch(r"C:(\d+)", spec)
    if m:
        N = int(m.group(1))
        for p in (2, 3, 5, 7):
            k = 0
            while p ** (k + 1) <= N and N % p ** (k + 1) == 0:
                k += 1
            if k and p ** k == N:
                cf = forms.CyclicForms(p, k)
                cf.hol, cf.fam = hc, fam
                reps = [forms.cyclic_identity_suite(p, k, cf), forms.cyclic_oracle_check(p, k, cf),
                        forms.beta_parameterization_check(p, k, cf)]
                return "ok" if all(r.ok for r in reps) else "FAIL"
        return ""
    m = re.fullmatch(r"D:(\d+)", spec)
    if m and int(m.group(1)) >= 3:
        df = forms.DihedralForms(int(m.group(1)))
        df.hol, df.fam = hc, fam
        return "ok" if forms.dihedral_suite(df.n, df).ok else "FAIL"
    return ""


# -- rendering ------------------------------------------------------------------

COLUMNS = ["spec", "group", "|S∩R|", "|Q|", "|H|", "π(Q)", "QHol", "NHol"]


def _row(r: GroupReport) -> list[str]:
    if r.error:
        return [r.spec, r.display] + [f"error: {r.error}"] * (len(COLUMNS) - 2)

    def num(x):
        return "inconclusive" if x is None else str(x)

    return [r.spec, r.display, num(r.sr), num(r.q), num(r.h), r.pi_cell, r.qhol_verdict,
            r.nhol_split]


def render(reports: list[GroupReport], fmt: str = "md", timings: bool = False) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict(timings) for r in reports], indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        for r in reports:
            w.writerow(_row(r))
        return buf.getvalue()
    if fmt != "md":
        raise ValueError(f"unknown format {fmt!r}")
    def line(cells):
        return "| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |"

    lines = [line(COLUMNS), "|" + "---|" * len(COLUMNS)]
    lines += [line(_row(r)) for r in reports]
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> list[GroupReport]:
    return [GroupReport.from_dict(d) for d in json.loads(text)]


def table(specs=None, max_order: int | None = None, fmt: str = "md",
          options: Options | None = None, threads: int = 1) -> tuple[str, list[GroupReport]]:
    """Analyze the selected specs (catalog rows by default) and render them."""
    specs = select_specs(specs, max_order)
    reports = run_all(specs, options or Options(), threads)
    return render(reports, fmt), reports


def select_specs(specs=None, max_order: int | None = None) -> list[str]:
    if specs is None:
        specs = [e.spec for e in catalog.table_catalog()]
    else:
        specs = list(specs)
    if max_order is not None:
        specs = [s for s in specs if catalog.group_from_spec(s).n <= max_order]
    rank = {e.spec: i for i, e in enumerate(catalog.table_catalog())}
    return sorted(dict.fromkeys(specs), key=lambda s: (rank.get(s, len(rank)),
                                                       catalog.group_from_spec(s).n, s))


def run_all(specs, options: Options, threads: int = 1) -> list[GroupReport]:
    if threads <= 1 or len(specs) <= 1:
        return [_logged(s, options) for s in specs]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(_logged, specs, [options] * len(specs)))


def _logged(spec: str, options: Options) -> GroupReport:
    r = analyze(spec, options)
    log.info("%s: S∩R=%s Q=%s H=%s %s %s (%.1fs)", spec, r.sr, r.q, r.h, r.pi_cell,
             r.error, sum(r.timings.values()))
    return r


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qhol", description=(
        "Regular subgroup families of Hol(G), the quasi-holomorph and its "
        "Zappa-Szép complements for small groups."))
    ap.add_argument("--spec", action="append", help="group spec such as D:4 or AB:4x2; repeatable "
                    "(default: every catalog row)")
    ap.add_argument("--max-order", type=int, help="keep only groups of at most this order")
    ap.add_argument("--format", choices=["md", "csv", "json"], default="md")
    ap.add_argument("--budget-nodes", type=int, default=regsets.DEFAULT_BUDGET,
                    help="node budget for each search")
    ap.add_argument("--complement-cap", type=int, default=DEFAULT_COMPLEMENT_CAP,
                    help="stop the complement search after this many complements")
    ap.add_argument("--threads", type=int, default=1, help="worker processes for rows")
    ap.add_argument("--verbose", action="store_true")
    ap.add_argument("--closed-form-check", action="store_true",
                    help="also run the cyclic p-group and dihedral closed-form checks")
    ap.add_argument("--timings", action="store_true", help="include timings in JSON output")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        specs = select_specs(args.spec, args.max_order)
    except (QholError, ValueError) as exc:
        print(f"qhol: {exc}", file=sys.stderr)
        return 2
    opts = Options(budget_nodes=args.budget_nodes, complement_cap=args.complement_cap,
                   closed_form_check=args.closed_form_check)
    reports = run_all(specs, opts, args.threads)
    sys.stdout.write(render(reports, args.format, args.timings))
    return 1 if any(r.error for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())

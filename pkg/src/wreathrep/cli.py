"""wreathrep command line: enumeration, representation export and verification suites.

Exit status: 0 when every selected check passes, 1 on a verification failure,
2 on a usage error (bad flags, bad group or diagram, guard exceeded).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .gcombinatorics import GYoungDiagram, enumerate_gdiagrams, enumerate_gtableaux, phi
from .group_core import GroupError, GroupTable, inverse_class_involution, load_group, verify_group_irreps
from .gz_rep import (
    FORMS,
    branch,
    build_rep,
    dimension,
    verify_branching,
    verify_characters,
    verify_rep,
    yjm_diagonal_expected,
    yjm_matrix,
)
from .johnson import (
    build_sjb,
    generalized_scheme,
    gz_highest_subspace,
    identity_bi,
    in_y2_i,
    johnson_decomposition,
    load_action,
    verify_ev,
    verify_sjb,
    y2_diagrams,
)
from .scalars import DEFAULT_TOL, Quad, format_scalar
from .wreath import OrderGuardError, WreathGroup, gz_dimension, gz_dimension_expected, verify_commutant, verify_relations, verify_types

SUITES = ("group", "relations", "types", "commutant", "yjm", "characters", "rep", "branch", "bi", "johnson")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    group: str = "trivial"
    n: int | None = None
    mu: str | None = None
    form: str = "seminormal"
    out: str | None = None
    tol: float = DEFAULT_TOL
    seed: int = 0
    suite: str = "all"
    x: str = "point"
    i: int | None = None

    def __post_init__(self):
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.n is not None and self.n < 1:
            raise UsageError("--n must be at least 1")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, (Fraction, Quad, complex)):
        return format_scalar(obj)
    if isinstance(obj, GYoungDiagram):
        return obj.to_json()
    return str(obj)


def parse_mu(text: str, G: GroupTable) -> GYoungDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--mu is not valid JSON: {exc}") from None
    t = len(G.irreps)
    if isinstance(data, list) and all(isinstance(x, int) for x in data):
        if t != 1:
            raise UsageError("a bare partition is only accepted for a group with one irrep")
        data = [data]
    try:
        return GYoungDiagram.from_json(data, t)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad --mu: {exc}") from None


def _need(cfg: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(cfg, name) is None:
            raise UsageError(f"--{name} is required for '{cfg.command}'")


# -- commands --------------------------------------------------------------------


def cmd_tableaux(cfg: RunConfig, G: GroupTable) -> tuple[dict, bool]:
    _need(cfg, "n")
    diagrams = [parse_mu(cfg.mu, G)] if cfg.mu else enumerate_gdiagrams(cfg.n, len(G.irreps))
    out = []
    total = 0
    for mu in diagrams:
        if mu.size != cfg.n:
            raise UsageError(f"--mu has {mu.size} boxes, expected {cfg.n}")
        tabs = enumerate_gtableaux(mu)
        total += len(tabs)
        out.append({
            "mu": mu.to_json(),
            "dimension": dimension(mu, G),
            "tableaux": [{"entries": T.to_json()["entries"], "content_vector": phi(T, G).to_json()} for T in tabs],
        })
    return {"group": G.name, "n": cfg.n, "diagram_count": len(out), "tableau_count": total, "diagrams": out}, True


def cmd_rep(cfg: RunConfig, G: GroupTable) -> tuple[dict, bool]:
    _need(cfg, "mu")
    mu = parse_mu(cfg.mu, G)
    if mu.size < 1:
        raise UsageError("--mu must have at least one box")
    return build_rep(mu, G, cfg.form).to_json(), True


def cmd_branch(cfg: RunConfig, G: GroupTable) -> tuple[dict, bool]:
    _need(cfg, "mu")
    mu = parse_mu(cfg.mu, G)
    if mu.size < 1:
        raise UsageError("--mu must have at least one box")
    check = verify_branching(mu, G)
    return {"mu": mu.to_json(), "group": G.name, "branch": branch(mu, G).to_json(), "check": check}, check["ok"]


def cmd_sjb(cfg: RunConfig, G: GroupTable) -> tuple[dict, bool]:
    _need(cfg, "n")
    sjb = build_sjb(cfg.n)
    checks = verify_sjb(sjb, cfg.n)
    ev = verify_ev(sjb, cfg.n)
    ok = checks["ok"] and ev["ok"]
    return {"n": cfg.n, "ok": ok, "checks": checks["checks"], "eigenvalues": ev, "chains": [c.to_json() for c in sjb]}, ok


def cmd_johnson(cfg: RunConfig, G: GroupTable) -> tuple[dict, bool]:
    _need(cfg, "n")
    action = load_action(cfg.x, G)
    layers = range(cfg.n + 1) if cfg.i is None else [cfg.i]
    scheme = generalized_scheme(G, action, cfg.n)
    highest = []
    for mu in y2_diagrams(cfg.n, G, action):
        for i in layers:
            if in_y2_i(mu, i):
                h = gz_highest_subspace(mu, i, G, action)
                highest.append({k: h[k] for k in ("mu", "i", "dimension", "ok", "eigenvalues")})
    ok = scheme["ok"] and all(h["ok"] for h in highest)
    return {
        "group": G.name,
        "action": action.name,
        "n": cfg.n,
        "ok": ok,
        "johnson_decomposition": {str(i): johnson_decomposition(cfg.n, i) for i in layers},
        "identity_bi": identity_bi(cfg.n),
        "generalized_scheme": scheme,
        "highest_subspaces": highest,
    }, ok


def _suite(name: str, cfg: RunConfig, G: GroupTable) -> dict:
    n = cfg.n
    diagrams = enumerate_gdiagrams(n, len(G.irreps))
    if name == "group":
        rep = verify_group_irreps(G, cfg.tol)
        inv = inverse_class_involution(G)
        ok = rep["ok"] and all(inv(inv(j)) == j for j in range(G.num_classes)) and inv(0) == 0
        return {"ok": ok, "irreps": rep, "class_involution": [j + 1 for j in inv.map]}
    if name == "relations":
        return verify_relations(WreathGroup(G, n))
    if name == "types":
        return verify_types(WreathGroup(G, n))
    if name == "commutant":
        W = WreathGroup(G, n)
        rep = verify_commutant(W)
        got, want = gz_dimension(W), gz_dimension_expected(W)
        rep["gz_dimension"] = {"ok": got == want, "generated": got, "tableaux": want}
        rep["ok"] = rep["ok"] and got == want
        return rep
    if name == "yjm":
        results = []
        for mu in diagrams:
            rep = build_rep(mu, G, cfg.form)
            worst = max(yjm_matrix(rep, i).max_residual(yjm_diagonal_expected(rep, i)) for i in range(1, n + 1))
            results.append({"mu": mu.to_json(), "ok": worst <= cfg.tol, "residual": worst})
        return {"ok": all(r["ok"] for r in results), "reps": results}
    if name == "characters":
        return verify_characters(n, G, cfg.tol)
    if name == "rep":
        results = [verify_rep(build_rep(mu, G, cfg.form), seed=cfg.seed, tol=cfg.tol) for mu in diagrams]
        return {"ok": all(r["ok"] for r in results), "reps": results}
    if name == "branch":
        results = [verify_branching(mu, G) for mu in diagrams]
        return {"ok": all(r["ok"] for r in results), "diagrams": results}
    if name == "bi":
        values = {str(k): identity_bi(k) for k in range(n + 1)}
        return {"ok": all(values.values()), "identity_bi": values}
    if name == "johnson":
        sjb = build_sjb(n)
        structure, ev = verify_sjb(sjb, n), verify_ev(sjb, n)
        scheme = generalized_scheme(G, load_action(cfg.x, G), n)
        return {"ok": structure["ok"] and ev["ok"] and scheme["ok"], "sjb": structure, "eigenvalues": ev, "scheme": scheme}
    raise UsageError(f"unknown suite {name!r}")


def cmd_verify(cfg: RunConfig, G: GroupTable) -> tuple[dict, bool]:
    _need(cfg, "n")
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    reports = [{"suite": name, **_suite(name, cfg, G)} for name in names]
    ok = all(r["ok"] for r in reports)
    return {"group": G.name, "n": cfg.n, "form": cfg.form, "ok": ok, "suites": reports}, ok


COMMANDS = {
    "tableaux": cmd_tableaux,
    "rep": cmd_rep,
    "verify": cmd_verify,
    "branch": cmd_branch,
    "sjb": cmd_sjb,
    "johnson": cmd_johnson,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wreathrep", description="Representations of wreath products G~S_n.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--group", default="trivial", help='"trivial", "cyclic:m", "sym:3" or a group JSON file')
        p.add_argument("--n", type=int)
        p.add_argument("--mu", help='Young G-diagram as JSON, e.g. {"1": [2, 1]}')
        p.add_argument("--form", choices=FORMS, default="seminormal")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--out", help="write JSON here instead of stdout")
        p.add_argument("--seed", type=int, default=0)
        if name == "verify":
            p.add_argument("--suite", choices=SUITES + ("all",), default="all")
        if name in ("verify", "johnson"):
            p.add_argument("--x", default="point", help='G-set: "point", "regular" or JSON permutations')
        if name == "johnson":
            p.add_argument("--i", type=int, help="only this rank layer")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
        G = load_group(cfg.group)
        payload, ok = COMMANDS[cfg.command](cfg, G)
    except (UsageError, GroupError, OrderGuardError, ValueError, OSError) as exc:
        print(f"wreathrep: error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(_jsonable(payload), indent=2) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

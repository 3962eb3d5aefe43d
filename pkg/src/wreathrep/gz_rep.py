"""Irreducible G_n-modules in the Gelfand-Tsetlin basis.

The basis of V^mu is indexed by pairs ``(T, j)``: a standard Young G-tableau ``T`` and
a multi-index ``j`` into ``V^{r_T(1)} x ... x V^{r_T(n)}``. Base-group factors act on
the tensor slot they name; Coxeter generators act by the seminormal or orthogonal
rules, always combined with the swap of tensor slots ``i`` and ``i+1``.
"""

from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial

from .gcombinatorics import (
    GTableau,
    GYoungDiagram,
    enumerate_gdiagrams,
    enumerate_gtableaux,
    hook_length_count,
    inner_corners,
    remove_box,
    tableau_length,
)
from .group_core import GroupTable
from .linalg import SparseMatrix
from .scalars import DEFAULT_TOL, conj, exact_sqrt, field_of, format_scalar, join_fields, residual
from .wreath import WreathElement, WreathGroup, b_element, yjm

FORMS = ("seminormal", "orthogonal")


def dimension(mu: GYoungDiagram, G: GroupTable) -> int:
    """multinomial(n; n_1..n_t) * prod f^{mu(sigma)} * prod d_sigma^{n_sigma}"""
    n = mu.size
    total = factorial(n)
    for s, p in enumerate(mu.shapes):
        k = sum(p)
        total //= factorial(k)
        total *= hook_length_count(p) * G.dims[s] ** k
    return total


def _coxeter_word(perm: tuple[int, ...]) -> list[int]:
    """1-based Coxeter indices i_1..i_k with perm = s_{i_1} ... s_{i_k}, k = inversions."""
    p = list(perm)
    peeled = []
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                # perm = (perm s_i) s_i, and perm s_i has one inversion fewer
                p[i], p[i + 1] = p[i + 1], p[i]
                peeled.append(i + 1)
                break
        else:
            return peeled[::-1]


@dataclass
class GZRep:
    """V^mu in the Gelfand-Tsetlin basis.

    Basis vectors are (tableau index, multi-index into the irreps on boxes 1..n).
    The block of the row-major tableau uses the group's own irrep matrices on each
    tensor factor, and the other blocks are reached along Coxeter words. Any other
    block-diagonal change of basis on the tensor factors gives an equally valid
    realization, so the matrices are canonical only up to that choice.
    """

    mu: GYoungDiagram
    G: GroupTable
    form: str
    tableaux: list[GTableau]
    basis: list[tuple[int, tuple[int, ...]]]
    coxeter: dict[int, SparseMatrix]
    scalar_kind: str
    _index: dict = field(default_factory=dict, repr=False)
    _factor_cache: dict = field(default_factory=dict, repr=False)
    _base_cache: dict = field(default_factory=dict, repr=False)
    _perm_cache: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.mu.size

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def wreath(self) -> WreathGroup:
        return WreathGroup(self.G, self.n)

    def _scalar(self, x):
        return complex(x) if self.scalar_kind == "complex" else x

    def factor_action(self, l: int, g: int) -> SparseMatrix:
        """Matrix of g^(l): M_{r_T(l)}(g) on tensor slot l of every block."""
        key = (l, g)
        if key in self._factor_cache:
            return self._factor_cache[key]
        m = SparseMatrix(self.dim, self.dim)
        for col, (t, j) in enumerate(self.basis):
            sigma = self.tableaux[t].label(l)
            M = self.G.irreps[sigma].matrices[g]
            for k in range(len(M)):
                x = M[k][j[l - 1]]
                if x:
                    jk = j[: l - 1] + (k,) + j[l:]
                    m.set(self._index[(t, jk)], col, self._scalar(x))
        self._factor_cache[key] = m
        return m

    def base_matrix(self, gvec: tuple[int, ...]) -> SparseMatrix:
        if gvec in self._base_cache:
            return self._base_cache[gvec]
        m = SparseMatrix.identity(self.dim)
        for l, g in enumerate(gvec, start=1):
            if g:
                m = m @ self.factor_action(l, g)
        self._base_cache[gvec] = m
        return m

    def perm_matrix(self, perm: tuple[int, ...]) -> SparseMatrix:
        if perm in self._perm_cache:
            return self._perm_cache[perm]
        m = SparseMatrix.identity(self.dim)
        for i in _coxeter_word(perm):
            m = m @ self.coxeter[i]
        self._perm_cache[perm] = m
        return m

    def to_json(self) -> dict:
        def dense(m: SparseMatrix):
            return [[format_scalar(x) for x in row] for row in m.to_dense()]

        return {
            "mu": self.mu.to_json(),
            "group": self.G.name,
            "n": self.n,
            "form": self.form,
            "dimension": self.dim,
            "scalar_kind": self.scalar_kind,
            "basis": [
                {"tableau": self.tableaux[t].to_json()["entries"], "index": [x + 1 for x in j]}
                for t, j in self.basis
            ],
            "coxeter": {str(i): dense(m) for i, m in sorted(self.coxeter.items())},
            "factor_action": {
                str(l): {str(g): dense(self.factor_action(l, g)) for g in range(1, self.G.order)}
                for l in range(1, self.n + 1)
            },
        }


def _same_row_or_col(T: GTableau, i: int) -> str | None:
    s1, r1, c1 = T.box(i)
    s2, r2, c2 = T.box(i + 1)
    if s1 != s2:
        return "different"
    if r1 == r2:
        return "row"
    if c1 == c2:
        return "column"
    return None


def _off_diagonal_coefficients(tableaux: list[GTableau], n: int, form: str):
    """(T index, i) -> (1/r, coefficient of the s_i T component)."""
    lengths = [tableau_length(T) for T in tableaux]
    pos = {T: k for k, T in enumerate(tableaux)}
    out = {}
    for k, T in enumerate(tableaux):
        for i in range(1, n):
            if _same_row_or_col(T, i) is not None:
                continue
            r = T.content_of(i + 1) - T.content_of(i)
            rinv = Fraction(1, r)
            S = pos[T.swap(i)]
            if form == "orthogonal":
                coef = exact_sqrt(1 - rinv * rinv)
            elif lengths[S] == lengths[k] + 1:
                coef = Fraction(1)
            else:
                coef = 1 - rinv * rinv
            out[(k, i)] = (rinv, S, coef)
    return out


def build_rep(mu: GYoungDiagram, G: GroupTable, form: str = "seminormal") -> GZRep:
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}")
    n = mu.size
    if n < 1:
        raise ValueError("mu must have at least one box")
    if mu.t != len(G.irreps):
        raise ValueError(f"mu has {mu.t} constituents but {G.name} has {len(G.irreps)} irreps")
    tableaux = enumerate_gtableaux(mu)
    basis = []
    for t, T in enumerate(tableaux):
        for j in itertools.product(*(range(G.dims[s]) for s in T.labels)):
            basis.append((t, j))
    index = {b: k for k, b in enumerate(basis)}

    mixed = _off_diagonal_coefficients(tableaux, n, form)
    used = {s for s, p in enumerate(mu.shapes) if p}
    kinds = [G.irreps[s].kind for s in used] + [field_of(c) for _, _, c in mixed.values()]
    kind = join_fields(kinds)
    if kind == "complex" and "complex" not in kinds:
        warnings.warn(
            f"{form} form of {mu} mixes {sorted(set(kinds) - {'rational'})}; using complex doubles",
            RuntimeWarning,
            stacklevel=2,
        )
    conv = complex if kind == "complex" else (lambda x: x)

    def swapped(j, i):
        j = list(j)
        j[i - 1], j[i] = j[i], j[i - 1]
        return tuple(j)

    coxeter = {}
    for i in range(1, n):
        m = SparseMatrix(len(basis), len(basis))
        for col, (t, j) in enumerate(basis):
            T = tableaux[t]
            sj = swapped(j, i)
            case = _same_row_or_col(T, i)
            if case == "row":
                m.set(index[(t, sj)], col, conv(Fraction(1)))
            elif case == "column":
                m.set(index[(t, sj)], col, conv(Fraction(-1)))
            elif case == "different":
                S = tableaux.index(T.swap(i))
                m.set(index[(S, sj)], col, conv(Fraction(1)))
            else:
                rinv, S, coef = mixed[(t, i)]
                m.add_to(index[(t, sj)], col, conv(rinv))
                m.add_to(index[(S, sj)], col, conv(coef))
        coxeter[i] = m
    return GZRep(mu, G, form, tableaux, basis, coxeter, kind, _index=index)


@lru_cache(maxsize=512)
def cached_rep(mu: GYoungDiagram, G: GroupTable, form: str = "seminormal") -> GZRep:
    """build_rep memoised on (mu, G, form); reps are only read after construction."""
    return build_rep(mu, G, form)


def group_element_matrix(rep: GZRep, w: WreathElement) -> SparseMatrix:
    """rho(g_1^(1) ... g_n^(n) pi) = rho(base) rho(pi)."""
    rep.wreath.check(w)
    return rep.base_matrix(tuple(w.gvec)) @ rep.perm_matrix(tuple(w.perm))


def algebra_matrix(rep: GZRep, a) -> SparseMatrix:
    out = SparseMatrix(rep.dim, rep.dim)
    for w, c in a:
        out = out + group_element_matrix(rep, w).scale(c)
    return out


def yjm_matrix(rep: GZRep, i: int) -> SparseMatrix:
    return algebra_matrix(rep, yjm(rep.wreath, i))


def yjm_diagonal_expected(rep: GZRep, i: int) -> SparseMatrix:
    """Block-scalar (|G| / dim V^{r_T(i)}) * c(b_T(i)) on every block T."""
    m = SparseMatrix(rep.dim, rep.dim)
    for k, (t, _) in enumerate(rep.basis):
        T = rep.tableaux[t]
        value = Fraction(rep.G.order, rep.G.dims[T.label(i)]) * T.content_of(i)
        m.set(k, k, value)
    return m


def character(rep: GZRep, w: WreathElement):
    return group_element_matrix(rep, w).trace()


# -- characters, restriction and branching ------------------------------------


def class_data(W: WreathGroup):
    """[(type, representative, class size)] in type order."""
    by_type = W.classes_by_type()
    return [(rho, min(xs), len(xs)) for rho, xs in sorted(by_type.items())]


def char_table(n: int, G: GroupTable, form: str = "seminormal") -> dict:
    """Characters of every V^mu on every conjugacy class (by type) of G_n."""
    W = WreathGroup(G, n)
    W.guard("char_table")
    classes = class_data(W)
    diagrams = enumerate_gdiagrams(n, len(G.irreps))
    rows = []
    for mu in diagrams:
        rep = cached_rep(mu, G, form)
        rows.append([character(rep, rep_elt) for _, rep_elt, _ in classes])
    return {"diagrams": diagrams, "classes": classes, "rows": rows, "order": W.order}


def class_inner_product(table: dict, a: list, b: list):
    total = sum((size * x * conj(y) for (_, _, size), x, y in zip(table["classes"], a, b)), 0)
    if isinstance(total, complex):
        return total / table["order"]
    return total * Fraction(1, table["order"])


def mu_down_sigma(mu: GYoungDiagram, sigma: int) -> list[GYoungDiagram]:
    """Diagrams obtained by removing one inner corner of mu(sigma)."""
    p = mu.shapes[sigma]
    out = []
    for row in inner_corners(p) if p else []:
        shapes = list(mu.shapes)
        shapes[sigma] = remove_box(p, row)
        out.append(GYoungDiagram(tuple(shapes)))
    return out


@dataclass(frozen=True)
class BranchResult:
    parts: tuple[tuple[GYoungDiagram, int], ...]

    def total_dimension(self, G: GroupTable) -> int:
        return sum(m * dimension(lam, G) for lam, m in self.parts)

    def to_json(self) -> list[dict]:
        return [{"lambda": lam.to_json(), "multiplicity": m} for lam, m in self.parts]


def branch(mu: GYoungDiagram, G: GroupTable) -> BranchResult:
    """Restriction of V^mu from G_{n+1} to G_n by the corner-removal rule."""
    if mu.size < 1:
        raise ValueError("mu must have at least one box")
    mult: dict[GYoungDiagram, int] = {}
    for sigma in range(mu.t):
        for lam in mu_down_sigma(mu, sigma):
            mult[lam] = mult.get(lam, 0) + G.dims[sigma]
    return BranchResult(tuple(sorted(mult.items())))


def restriction_multiplicities(mu: GYoungDiagram, G: GroupTable) -> dict[GYoungDiagram, object]:
    """<Res chi^mu, chi^lambda> over G_n for every lambda, via embedded class representatives."""
    n = mu.size - 1
    big = cached_rep(mu, G)
    if n == 0:
        # G_0 is trivial: the restriction is dim(V^mu) copies of the trivial module
        return {GYoungDiagram(tuple(() for _ in G.irreps)): big.dim}
    W = WreathGroup(G, n)
    table = char_table(n, G)
    restricted = [character(big, W.embed(x)) for _, x, _ in table["classes"]]
    return {
        lam: class_inner_product(table, restricted, row) for lam, row in zip(table["diagrams"], table["rows"])
    }


# -- verification ----------------------------------------------------------------


def verify_rep(rep: GZRep, seed: int = 0, pairs: int = 100, tol: float = DEFAULT_TOL) -> dict:
    """Defining relations of G_n, homomorphism on random pairs, YJM diagonality."""
    W, G, n = rep.wreath, rep.G, rep.n
    checks = []
    ident = SparseMatrix.identity(rep.dim)
    s = rep.coxeter

    def record(name, pairs_iter):
        worst, witness = 0.0, None
        count = 0
        for label, a, b in pairs_iter:
            count += 1
            r = a.max_residual(b)
            if r > worst:
                worst, witness = r, label
        checks.append({"check": name, "ok": worst <= tol, "residual": worst, "cases": count, "witness": witness})

    def fa(l, g):
        return rep.factor_action(l, g)

    record("s_i^2 = 1", ((f"i={i}", s[i] @ s[i], ident) for i in range(1, n)))
    record("braid", ((f"i={i}", s[i] @ s[i + 1] @ s[i], s[i + 1] @ s[i] @ s[i + 1]) for i in range(1, n - 1)))
    record("far commutation",
           ((f"i={i},j={j}", s[i] @ s[j], s[j] @ s[i]) for i in range(1, n) for j in range(i + 2, n)))
    record("s_i g^(i) s_i = g^(i+1)",
           ((f"i={i},g={g}", s[i] @ fa(i, g) @ s[i], fa(i + 1, g)) for i in range(1, n) for g in range(G.order)))
    record("s_i g^(l) = g^(l) s_i",
           ((f"i={i},l={l},g={g}", s[i] @ fa(l, g), fa(l, g) @ s[i])
            for i in range(1, n) for l in range(1, n + 1) if l not in (i, i + 1) for g in range(G.order)))
    record("factor homomorphism",
           ((f"l={l},g={g},h={h}", fa(l, g) @ fa(l, h), fa(l, G.mul[g][h]))
            for l in range(1, n + 1) for g in range(G.order) for h in range(G.order)))
    record("factors commute",
           ((f"l={l},m={m},g={g},h={h}", fa(l, g) @ fa(m, h), fa(m, h) @ fa(l, g))
            for l in range(1, n + 1) for m in range(l + 1, n + 1) for g in range(1, G.order) for h in range(1, G.order)))

    rng = random.Random(seed)

    def random_element():
        perm = list(range(n))
        rng.shuffle(perm)
        return WreathElement(tuple(rng.randrange(G.order) for _ in range(n)), tuple(perm))

    def homomorphism_cases():
        for _ in range(pairs):
            x, y = random_element(), random_element()
            lhs = group_element_matrix(rep, x) @ group_element_matrix(rep, y)
            yield f"x={x.to_json()},y={y.to_json()}", lhs, group_element_matrix(rep, W.mul(x, y))

    record("homomorphism (random pairs)", homomorphism_cases())

    X = {i: yjm_matrix(rep, i) for i in range(1, n + 1)}
    record("YJM diagonal", ((f"i={i}", X[i], yjm_diagonal_expected(rep, i)) for i in range(1, n + 1)))
    record("X_{i+1} s_i = s_i X_i + b_i",
           ((f"i={i}", X[i + 1] @ s[i], s[i] @ X[i] + algebra_matrix(rep, b_element(W, i))) for i in range(1, n)))
    record("X_i commutes with base group",
           ((f"i={i},l={l},g={g}", X[i] @ fa(l, g), fa(l, g) @ X[i])
            for i in range(2, n + 1) for l in range(1, n + 1) for g in range(1, G.order)))
    if rep.form == "orthogonal":
        record("unitary", ((f"s_{i}", s[i] @ s[i].conj_transpose(), ident) for i in range(1, n)))
    return {
        "ok": all(c["ok"] for c in checks),
        "mu": rep.mu.to_json(),
        "form": rep.form,
        "dimension": rep.dim,
        "scalar_kind": rep.scalar_kind,
        "checks": checks,
    }


def verify_characters(n: int, G: GroupTable, tol: float = DEFAULT_TOL) -> dict:
    """Sum of squared dimensions, class count and first orthogonality of characters."""
    table = char_table(n, G)
    dims = [dimension(mu, G) for mu in table["diagrams"]]
    checks = []
    total = sum(d * d for d in dims)
    checks.append({"check": "sum of dim^2 = |G_n|", "ok": total == table["order"], "values": [total, table["order"]]})
    chi_e = all(row[0] == d for row, d in zip(table["rows"], dims))
    checks.append({"check": "chi(e) = dimension", "ok": chi_e})
    ntypes = len(table["classes"])
    checks.append({"check": "class count = diagram count", "ok": ntypes == len(dims), "values": [ntypes, len(dims)]})
    worst, witness = 0.0, None
    rows = table["rows"]
    for a, b in itertools.product(range(len(rows)), repeat=2):
        r = residual(class_inner_product(table, rows[a], rows[b]), 1 if a == b else 0)
        if r > worst:
            worst, witness = r, [str(table["diagrams"][a]), str(table["diagrams"][b])]
    checks.append({"check": "character orthonormality", "ok": worst <= tol, "residual": worst, "witness": witness})
    return {"ok": all(c["ok"] for c in checks), "checks": checks}


def verify_branching(mu: GYoungDiagram, G: GroupTable) -> dict:
    """Corner-removal rule against character inner products of the restriction."""
    combinatorial = dict(branch(mu, G).parts)
    measured = restriction_multiplicities(mu, G)
    mismatches = []
    for lam, m in measured.items():
        if residual(m, combinatorial.get(lam, 0)) > DEFAULT_TOL:
            mismatches.append({"lambda": str(lam), "rule": combinatorial.get(lam, 0), "measured": format_scalar(m)})
    return {"ok": not mismatches, "mu": mu.to_json(), "mismatches": mismatches}

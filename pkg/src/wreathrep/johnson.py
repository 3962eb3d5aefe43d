"""Boolean lattice, symmetric Jordan bases and the generalized Johnson scheme.

Subsets of ``[n]`` are sorted tuples of 1-based integers. Words in ``B_X(n)`` are
tuples of letters where ``0`` is the zero letter and ``1..|X|`` are the points of X.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .gcombinatorics import GTableau, GYoungDiagram, enumerate_gdiagrams, row_major_tableau, tableau_from_rows
from .group_core import GroupTable
from .gz_rep import char_table, class_inner_product, dimension
from .linalg import Echelon, rank
from .scalars import DEFAULT_TOL, conj, format_scalar, is_zero
from .wreath import WreathElement, WreathGroup, yjm

Subset = tuple[int, ...]
Word = tuple[int, ...]


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if not is_zero(v)}


@dataclass(frozen=True)
class RankedVector:
    """Sparse combination of subsets (ambient "subsets") or words (ambient "words")."""

    terms: dict
    ambient: str = "subsets"

    @classmethod
    def of(cls, terms: dict, ambient: str = "subsets") -> "RankedVector":
        return cls(_clean(terms), ambient)

    def _rank_of(self, key) -> int:
        return len(key) if self.ambient == "subsets" else sum(1 for a in key if a)

    @property
    def ranks(self) -> set[int]:
        return {self._rank_of(k) for k in self.terms}

    @property
    def rank(self) -> int:
        r = self.ranks
        if len(r) != 1:
            raise ValueError(f"vector is not homogeneous (ranks {sorted(r)})")
        return r.pop()

    def is_homogeneous(self) -> bool:
        return len(self.ranks) <= 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "RankedVector") -> "RankedVector":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return RankedVector.of(out, self.ambient)

    def __sub__(self, other: "RankedVector") -> "RankedVector":
        return self + other.scale(-1)

    def scale(self, c) -> "RankedVector":
        return RankedVector.of({k: c * v for k, v in self.terms.items()}, self.ambient)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RankedVector):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self.terms.items())))

    def to_json(self) -> list[dict]:
        key = "subset" if self.ambient == "subsets" else "word"
        return [{key: list(k), "coef": format_scalar(v)} for k, v in sorted(self.terms.items())]

    def __repr__(self) -> str:
        parts = [f"{format_scalar(v)}*{set(k) if k else '{}'}" for k, v in sorted(self.terms.items())]
        return " + ".join(parts) or "0"


def subset_vector(*subsets, coef=1) -> RankedVector:
    return RankedVector.of({tuple(sorted(s)): Fraction(coef) for s in subsets})


def up_operator(v: RankedVector, n: int) -> RankedVector:
    """U(X) = sum of the subsets of [n] covering X."""
    out: dict = {}
    for X, c in v.terms.items():
        for y in range(1, n + 1):
            if y not in X:
                Y = tuple(sorted(X + (y,)))
                out[Y] = out.get(Y, 0) + c
    return RankedVector.of(out)


def bar(v: RankedVector, m: int) -> RankedVector:
    """X -> X u {m}."""
    return RankedVector.of({X + (m,): c for X, c in v.terms.items()})


@dataclass(frozen=True)
class SJChain:
    vectors: tuple[RankedVector, ...]
    start: int
    rows: tuple[tuple[int, ...], ...]  # label: rows of a standard tableau with at most two rows

    @property
    def end(self) -> int:
        return self.start + len(self.vectors) - 1

    @property
    def tableau(self) -> GTableau:
        return tableau_from_rows([[list(r) for r in self.rows if r]])

    def vector_at_rank(self, r: int) -> RankedVector:
        if not self.start <= r <= self.end:
            raise ValueError(f"chain covers ranks {self.start}..{self.end}, not {r}")
        return self.vectors[r - self.start]

    def to_json(self) -> dict:
        return {
            "start_rank": self.start,
            "tableau": [list(r) for r in self.rows if r],
            "vectors": [v.to_json() for v in self.vectors],
        }


def build_sjb(n: int) -> list[SJChain]:
    """Symmetric Jordan basis of V(B(n)) by the recursive doubling construction."""
    if n < 1:
        raise ValueError("n must be at least 1")
    chains = [SJChain((subset_vector(()), subset_vector((1,))), 0, ((1,), ()))]
    for m in range(1, n):
        new = m + 1  # the element being added
        nxt = []
        for ch in chains:
            k, xs = ch.start, ch.vectors
            top, second = ch.rows

            def x(l):
                return xs[l - k] if k <= l <= m - k else RankedVector.of({})

            plus1 = (top + (new,), second)
            if k == m - k:
                nxt.append(SJChain((xs[0], bar(xs[0], new)), k, plus1))
                continue
            y = tuple(x(l) + bar(x(l - 1), new).scale(l - k) for l in range(k, m + 2 - k))
            z = tuple(bar(x(l - 1), new).scale(m - k - l + 1) - x(l) for l in range(k + 1, m - k + 1))
            nxt.append(SJChain(y, k, plus1))
            nxt.append(SJChain(z, k + 1, (top, second + (new,))))
        chains = nxt
    return chains


def yjm_sn_apply(j: int, v: RankedVector) -> RankedVector:
    """Y_j = sum_{k<j} (k, j), permuting the elements inside each subset."""
    out: dict = {}
    for X, c in v.terms.items():
        for k in range(1, j):
            Y = tuple(sorted(j if a == k else k if a == j else a for a in X))
            out[Y] = out.get(Y, 0) + c
    return RankedVector.of(out)


def verify_sjb(sjb: list[SJChain], n: int) -> dict:
    """Chain property, symmetry, basis property and label counts."""
    checks = []
    ok_chain = all(
        up_operator(ch.vectors[i], n) == ch.vectors[i + 1] for ch in sjb for i in range(len(ch.vectors) - 1)
    ) and all(not up_operator(ch.vectors[-1], n) for ch in sjb)
    checks.append({"check": "U(v_l) = v_{l+1}, U(v_last) = 0", "ok": ok_chain})
    sym = all(ch.start + ch.end == n and all(v.rank == ch.start + i for i, v in enumerate(ch.vectors)) for ch in sjb)
    checks.append({"check": "symmetric ranks", "ok": sym})
    vectors = [v.terms for ch in sjb for v in ch.vectors]
    r = rank(vectors)
    checks.append({"check": "basis of V(B(n))", "ok": r == len(vectors) == 2**n, "rank": r})
    counts_ok = True
    for k in range(n // 2 + 1):
        chains_k = [ch for ch in sjb if ch.start == k]
        labels = {ch.rows for ch in chains_k}
        want = comb(n, k) - (comb(n, k - 1) if k else 0)
        shape_ok = all(len(ch.rows[0]) == n - k and len(ch.rows[1]) == k for ch in chains_k)
        if len(chains_k) != want or len(labels) != want or not shape_ok:
            counts_ok = False
    checks.append({"check": "chains starting at k = f^(n-k,k), labels distinct", "ok": counts_ok})
    return {"ok": all(c["ok"] for c in checks), "checks": checks}


def verify_ev(sjb: list[SJChain], n: int) -> dict:
    """Y_j v = c(b_T(j)) v for every vector of every chain labelled T."""
    for ch in sjb:
        T = ch.tableau
        for idx, v in enumerate(ch.vectors):
            for j in range(1, n + 1):
                if yjm_sn_apply(j, v) != v.scale(T.content_of(j)):
                    return {
                        "ok": False,
                        "first_failure": {"tableau": [list(r) for r in ch.rows], "j": j, "vector_index": idx},
                    }
    return {"ok": True, "first_failure": None}


def johnson_decomposition(n: int, i: int) -> list[tuple[int, int]]:
    """Constituents (n-k, k) of V(B(n)_i) as (k, dim V^(n-k,k))."""
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    return [(k, comb(n, k) - (comb(n, k - 1) if k else 0)) for k in range(min(i, n - i) + 1)]


def identity_bi(n: int) -> bool:
    total = sum((n - 2 * k + 1) * (comb(n, k) - (comb(n, k - 1) if k else 0)) for k in range(n // 2 + 1))
    return total == 2**n


# -- the generalized Johnson scheme ----------------------------------------------


@dataclass(frozen=True)
class GroupAction:
    """G acting on X = {0..size-1}: ``perms[g][x]`` is g.x."""

    name: str
    size: int
    perms: tuple[tuple[int, ...], ...]

    def act(self, g: int, x: int) -> int:
        return self.perms[g][x]


def load_action(spec: str, G: GroupTable) -> GroupAction:
    """"regular" (G on itself by left multiplication), "point", or a JSON list of perms."""
    if spec == "regular":
        return GroupAction("regular", G.order, tuple(tuple(G.mul[g][x] for x in range(G.order)) for g in range(G.order)))
    if spec == "point":
        return GroupAction("point", 1, tuple((0,) for _ in range(G.order)))
    import json

    perms = json.loads(spec)
    return make_action("custom", G, perms)


def make_action(name: str, G: GroupTable, perms) -> GroupAction:
    perms = tuple(tuple(int(x) for x in p) for p in perms)
    if len(perms) != G.order:
        raise ValueError("need one permutation per group element")
    size = len(perms[0])
    if any(sorted(p) != list(range(size)) for p in perms):
        raise ValueError("action entries must be permutations of 0..|X|-1")
    for g, h in itertools.product(range(G.order), repeat=2):
        if any(perms[G.mul[g][h]][x] != perms[g][perms[h][x]] for x in range(size)):
            raise ValueError(f"not an action: g={g}, h={h}")
    return GroupAction(name, size, perms)


def permutation_multiplicities(G: GroupTable, action: GroupAction) -> list:
    """<chi_V(X), chi_sigma> for every irrep sigma."""
    fixed = [sum(1 for x in range(action.size) if action.act(g, x) == x) for g in range(G.order)]
    out = []
    for irr in G.irreps:
        s = sum((fixed[g] * conj(irr.character(g)) for g in range(G.order)), 0)
        out.append(s / G.order if isinstance(s, complex) else s * Fraction(1, G.order))
    return out


def constituents(G: GroupTable, action: GroupAction) -> list[int]:
    """Irreps occurring in V(X), trivial first; refuses unless V(X) is multiplicity free."""
    mults = permutation_multiplicities(G, action)
    rounded = [round(complex(m).real) for m in mults]
    if any(abs(complex(m) - r) > DEFAULT_TOL for m, r in zip(mults, rounded)):
        raise ValueError(f"non-integral multiplicities {mults}")
    if any(r > 1 for r in rounded):
        bad = [s + 1 for s, r in enumerate(rounded) if r > 1]
        raise ValueError(f"V(X) is not multiplicity free: irreps {bad} repeat (multiplicities {rounded})")
    return [s for s, r in enumerate(rounded) if r == 1]


def y2_diagrams(n: int, G: GroupTable, action: GroupAction) -> list[GYoungDiagram]:
    """Y_{2,n}(G^): at most two rows on the trivial irrep, one row on other constituents."""
    present = set(constituents(G, action))
    out = []
    for mu in enumerate_gdiagrams(n, len(G.irreps)):
        ok = len(mu.shapes[0]) <= 2
        for s in range(1, len(G.irreps)):
            p = mu.shapes[s]
            if s not in present and p or len(p) > 1:
                ok = False
        if ok:
            out.append(mu)
    return out


def abs_of(mu: GYoungDiagram) -> tuple[int, int, int]:
    """(a(mu), b(mu), s(mu))."""
    top = mu.shapes[0]
    a = top[0] if top else 0
    b = top[1] if len(top) > 1 else 0
    s = sum(sum(p) for p in mu.shapes[1:])
    return a, b, s


def in_y2_i(mu: GYoungDiagram, i: int) -> bool:
    a, b, s = abs_of(mu)
    return b + s <= i <= a + s


def tuple_count_identity(n: int, G: GroupTable, action: GroupAction) -> tuple[int, int]:
    """((|X|+1)^n, sum over Y_{2,n} of (1 + a - b) dim V^mu)."""
    rhs = 0
    for mu in y2_diagrams(n, G, action):
        a, b, _ = abs_of(mu)
        rhs += (1 + a - b) * dimension(mu, G)
    return (action.size + 1) ** n, rhs


def act_on_word(G: GroupTable, action: GroupAction, w: WreathElement, word: Word) -> Word:
    """(g, pi).a = b with b_i = g_i . a_{pi^-1(i)}, the zero letter fixed."""
    n = len(word)
    pinv = [0] * n
    for i, p in enumerate(w.perm):
        pinv[p] = i
    out = []
    for i in range(n):
        a = word[pinv[i]]
        out.append(0 if a == 0 else action.act(w.gvec[i], a - 1) + 1)
    return tuple(out)


def words_of_rank(n: int, size: int, i: int) -> list[Word]:
    return [w for w in itertools.product(range(size + 1), repeat=n) if sum(1 for a in w if a) == i]


def permutation_character(W: WreathGroup, action: GroupAction, i: int, classes) -> list[int]:
    words = words_of_rank(W.n, action.size, i)
    return [sum(1 for a in words if act_on_word(W.G, action, x, a) == a) for _, x, _ in classes]


def _guard(n: int, action: GroupAction) -> None:
    from .wreath import max_order

    if (action.size + 1) ** n > max_order():
        raise ValueError(f"(|X|+1)^n = {(action.size + 1) ** n} exceeds the guard {max_order()}")


def generalized_scheme(G: GroupTable, action: GroupAction, n: int) -> dict:
    """The tuple-count identity and multiplicity-freeness of every V(B_X(n)_i)."""
    _guard(n, action)
    lhs, rhs = tuple_count_identity(n, G, action)
    table = char_table(n, G)
    W = WreathGroup(G, n)
    y2 = set(y2_diagrams(n, G, action))
    layers = []
    for i in range(n + 1):
        chi = permutation_character(W, action, i, table["classes"])
        mismatches = []
        for mu, row in zip(table["diagrams"], table["rows"]):
            m = class_inner_product(table, chi, row)
            want = 1 if mu in y2 and in_y2_i(mu, i) else 0
            exact = isinstance(m, (int, Fraction))
            if (m != want) if exact else abs(complex(m) - want) > DEFAULT_TOL:
                mismatches.append({"mu": mu.to_json(), "expected": want, "measured": format_scalar(m)})
        layers.append({"i": i, "ok": not mismatches, "mismatches": mismatches})
    return {
        "ok": lhs == rhs and all(layer["ok"] for layer in layers),
        "identity": {"lhs": lhs, "rhs": rhs, "ok": lhs == rhs},
        "layers": layers,
    }


# -- the highest-weight GZ subspace ------------------------------------------------


def isotypic_basis(G: GroupTable, action: GroupAction, sigma: int) -> list[dict]:
    """Basis of the sigma-isotypic part of V(X), letters 1..|X|, via the projection formula."""
    irr = G.irreps[sigma]
    ech = Echelon()
    out = []
    for x in range(action.size):
        v: dict = {}
        for g in range(G.order):
            y = action.act(g, x) + 1
            v[y] = v.get(y, 0) + conj(irr.character(g))
        scale = Fraction(irr.dim, G.order)
        v = _clean({k: c * scale for k, c in v.items()})
        if v and ech.add(v):
            out.append(v)
    return out


def _tensor(parts: list[dict]) -> dict:
    """Tensor product of single-letter vectors: one letter per position."""
    out: dict = {(): Fraction(1)}
    for p in parts:
        nxt: dict = {}
        for word, c in out.items():
            for letter, d in p.items():
                nxt[word + (letter,)] = nxt.get(word + (letter,), 0) + c * d
        out = nxt
    return _clean(out)


def gamma(u: RankedVector, q: int, size: int) -> dict:
    """Subset X of [q] -> tensor with z = sum of all points at positions in X, L_0 elsewhere."""
    z = {x: Fraction(1) for x in range(1, size + 1)}
    out: dict = {}
    for X, c in u.terms.items():
        for word, d in _tensor([z if k in X else {0: Fraction(1)} for k in range(1, q + 1)]).items():
            out[word] = out.get(word, 0) + c * d
    return _clean(out)


def apply_algebra(G: GroupTable, action: GroupAction, a, v: dict) -> dict:
    out: dict = {}
    for w, c in a:
        for word, d in v.items():
            img = act_on_word(G, action, w, word)
            out[img] = out.get(img, 0) + c * d
    return _clean(out)


def gz_highest_subspace(mu: GYoungDiagram, i: int, G: GroupTable, action: GroupAction) -> dict:
    """Subspace W of V(B_X(n)_i) of type V_R, and the check of its YJM eigenvalues."""
    n = mu.size
    _guard(n, action)
    if mu not in set(y2_diagrams(n, G, action)) or not in_y2_i(mu, i):
        raise ValueError(f"{mu} is not in Y_2,{n}(G^)_{i}")
    a, b, s = abs_of(mu)
    q = a + b
    parts: list[list[dict]] = []
    if q:
        chain = next(ch for ch in build_sjb(q) if ch.rows == (tuple(range(1, a + 1)), tuple(range(a + 1, q + 1))))
        u = chain.vector_at_rank(i - s)
        head = [gamma(u, q, action.size)]
    else:
        head = [{(): Fraction(1)}]
    tail_factors = []
    for sigma in range(1, len(G.irreps)):
        p = sum(mu.shapes[sigma])
        tail_factors += [isotypic_basis(G, action, sigma)] * p
    basis = []
    for choice in itertools.product(head, *tail_factors):
        h, rest = choice[0], choice[1:]
        tail = _tensor(list(rest))
        basis.append(_clean({w1 + w2: c1 * c2 for w1, c1 in h.items() for w2, c2 in tail.items()}))

    W = WreathGroup(G, n)
    R = row_major_tableau(mu)
    eigen = []
    ok = all(sum(1 for x in w if x) == i for v in basis for w in v)
    expected_dim = 1
    for sigma in range(1, len(G.irreps)):
        expected_dim *= G.dims[sigma] ** sum(mu.shapes[sigma])
    ok = ok and len(basis) == expected_dim == rank(basis)
    for j in range(1, n + 1):
        value = Fraction(G.order, G.dims[R.label(j)]) * R.content_of(j)
        Xj = yjm(W, j)
        good = all(apply_algebra(G, action, Xj, v) == _clean({k: c * value for k, c in v.items()}) for v in basis)
        eigen.append({"j": j, "expected": format_scalar(value), "ok": good})
        ok = ok and good
    ech = Echelon()
    for v in basis:
        ech.add(v)
    closed = all(
        ech.contains(apply_algebra(G, action, [(W.g_at(l, g), 1)], v))
        for v in basis
        for l in range(1, n + 1)
        for g in range(1, G.order)
    )
    return {
        "ok": ok and closed,
        "mu": mu.to_json(),
        "i": i,
        "dimension": len(basis),
        "closed_under_base_group": closed,
        "eigenvalues": eigen,
        "basis": [[{"word": list(w), "coef": format_scalar(c)} for w, c in sorted(v.items())] for v in basis],
    }

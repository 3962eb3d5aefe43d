"""The wreath product G_n = G^n x| S_n and its group algebra over the rationals.

An element is ``(gvec, perm)`` with ``perm`` stored 0-based as the tuple of images
(``perm[i] == pi(i)``). Multiplication follows

    (g, pi)(h, tau) = (g_1 h_{pi^-1(1)}, ..., g_n h_{pi^-1(n)}, pi tau),

so ``pi`` moves the entry in position ``pi^-1(i)`` to position ``i``. Positions,
YJM indices and Coxeter indices in the public functions are 1-based.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .group_core import GroupTable
from .gcombinatorics import enumerate_gdiagrams, enumerate_gtableaux
from .linalg import Echelon, rank
from .scalars import format_scalar

DEFAULT_MAX_ORDER = 10_000


class OrderGuardError(ValueError):
    """Raised when an operation would materialise too large a group."""


def max_order() -> int:
    return int(os.environ.get("WREATHREP_MAX_ORDER", DEFAULT_MAX_ORDER))


class WreathElement(NamedTuple):
    gvec: tuple[int, ...]
    perm: tuple[int, ...]

    def to_json(self) -> dict:
        return {"g": list(self.gvec), "perm": [p + 1 for p in self.perm]}


WreathType = tuple[tuple[int, int], ...]  # sorted parts (cycle length, class index)


def _perm_inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycles(perm: tuple[int, ...]) -> list[list[int]]:
    """Cycles (i_1, pi(i_1), ...) of a 0-based permutation, smallest element first."""
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = perm[i]
        out.append(cyc)
    return out


class WreathGroup:
    def __init__(self, G: GroupTable, n: int):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.G = G
        self.n = n
        self.order = G.order**n * factorial(n)
        self.identity = WreathElement((0,) * n, tuple(range(n)))

    def __repr__(self) -> str:
        return f"WreathGroup({self.G.name}, n={self.n})"

    def guard(self, what: str = "this operation") -> None:
        if self.order > max_order():
            raise OrderGuardError(
                f"{what} needs |G_n| = {self.order} > {max_order()} elements "
                "(raise WREATHREP_MAX_ORDER to override)"
            )

    # -- group law --------------------------------------------------------

    def mul(self, x: WreathElement, y: WreathElement) -> WreathElement:
        mul = self.G.mul
        pinv = _perm_inverse(x.perm)
        gvec = tuple(mul[x.gvec[i]][y.gvec[pinv[i]]] for i in range(self.n))
        perm = tuple(x.perm[y.perm[i]] for i in range(self.n))
        return WreathElement(gvec, perm)

    def inv(self, x: WreathElement) -> WreathElement:
        ginv = self.G.inv
        return WreathElement(tuple(ginv[x.gvec[x.perm[i]]] for i in range(self.n)), _perm_inverse(x.perm))

    def conj(self, h: WreathElement, x: WreathElement) -> WreathElement:
        """h x h^-1"""
        return self.mul(self.mul(h, x), self.inv(h))

    def check(self, x: WreathElement) -> None:
        if len(x.gvec) != self.n or len(x.perm) != self.n:
            raise ValueError(f"element {x} does not belong to G_{self.n}")
        if sorted(x.perm) != list(range(self.n)) or any(not 0 <= g < self.G.order for g in x.gvec):
            raise ValueError(f"malformed element {x}")

    # -- distinguished elements (1-based positions) -------------------------

    def g_at(self, l: int, g: int) -> WreathElement:
        gvec = [0] * self.n
        gvec[l - 1] = g
        return WreathElement(tuple(gvec), self.identity.perm)

    def base(self, gvec) -> WreathElement:
        return WreathElement(tuple(gvec), self.identity.perm)

    def perm_element(self, perm) -> WreathElement:
        return WreathElement(self.identity.gvec, tuple(perm))

    def transposition(self, k: int, l: int) -> WreathElement:
        p = list(range(self.n))
        p[k - 1], p[l - 1] = l - 1, k - 1
        return self.perm_element(p)

    def s(self, i: int) -> WreathElement:
        return self.transposition(i, i + 1)

    def generators(self) -> list[WreathElement]:
        return [self.g_at(1, g) for g in range(1, self.G.order)] + [self.s(i) for i in range(1, self.n)]

    def elements(self):
        self.guard("enumerating G_n")
        for perm in itertools.permutations(range(self.n)):
            for gvec in itertools.product(range(self.G.order), repeat=self.n):
                yield WreathElement(gvec, perm)

    def embed(self, x: WreathElement) -> WreathElement:
        """G_n inside G_{n+1}: append a fixed last position carrying e."""
        return WreathElement(x.gvec + (0,), x.perm + (self.n,))

    # -- conjugacy ----------------------------------------------------------

    def cycle_product(self, x: WreathElement, cyc: list[int]) -> int:
        mul, prod = self.G.mul, 0
        for i in cyc:
            prod = mul[x.gvec[i]][prod]
        return prod

    def type_of(self, x: WreathElement) -> WreathType:
        cls = self.G.class_of
        return tuple(sorted((len(c), cls[self.cycle_product(x, c)]) for c in cycles(x.perm)))

    def last_cycle(self, x: WreathElement) -> tuple[int, int]:
        """(length, class of cycle product) of the cycle containing position n."""
        for c in cycles(x.perm):
            if self.n - 1 in c:
                return len(c), self.G.class_of[self.cycle_product(x, c)]
        raise AssertionError("unreachable")

    def conjugacy_classes(self, generators=None) -> list[list[WreathElement]]:
        """Brute-force conjugation orbits (closure under conjugation by generators)."""
        gens = generators if generators is not None else self.generators()
        seen: set[WreathElement] = set()
        out = []
        for x in self.elements():
            if x in seen:
                continue
            orbit, frontier = {x}, [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for h in gens:
                        z = self.conj(h, y)
                        if z not in orbit:
                            orbit.add(z)
                            nxt.append(z)
                frontier = nxt
            seen |= orbit
            out.append(sorted(orbit))
        return out

    def classes_by_type(self) -> dict[WreathType, list[WreathElement]]:
        out: dict[WreathType, list[WreathElement]] = {}
        for x in self.elements():
            out.setdefault(self.type_of(x), []).append(x)
        return out


def wmul(W: WreathGroup, x: WreathElement, y: WreathElement) -> WreathElement:
    W.check(x)
    W.check(y)
    return W.mul(x, y)


def winv(W: WreathGroup, x: WreathElement) -> WreathElement:
    W.check(x)
    return W.inv(x)


def type_of(W: WreathGroup, x: WreathElement) -> WreathType:
    return W.type_of(x)


def enumerate_types(n: int, t: int) -> list[WreathType]:
    """P_n(G_*): maps class -> partition with n boxes in total, as sorted part lists."""
    out = []
    for diag in enumerate_gdiagrams(n, t):
        out.append(tuple(sorted((k, j) for j, p in enumerate(diag.shapes) for k in p)))
    return out


def enumerate_triples(n: int, t: int) -> list[tuple[WreathType, int, int]]:
    """P'_n(G_*): (rho, lambda, j) with (lambda, j) a part of rho."""
    return [(rho, k, j) for rho in enumerate_types(n, t) for (k, j) in sorted(set(rho))]


# -- group algebra ------------------------------------------------------------


class AlgebraElement:
    """Sparse rational combination of group elements of a fixed WreathGroup."""

    __slots__ = ("W", "terms")

    def __init__(self, W: WreathGroup, terms: dict | None = None):
        self.W = W
        self.terms = {x: c for x, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, W: WreathGroup, *elements: WreathElement) -> "AlgebraElement":
        out: dict = {}
        for x in elements:
            out[x] = out.get(x, 0) + 1
        return cls(W, out)

    @classmethod
    def one(cls, W: WreathGroup) -> "AlgebraElement":
        return cls(W, {W.identity: Fraction(1)})

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def _same(self, other: "AlgebraElement") -> None:
        if other.W.n != self.W.n or other.W.G is not self.W.G:
            raise ValueError("algebra elements of different groups")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        out = dict(self.terms)
        for x, c in other.terms.items():
            out[x] = out.get(x, 0) + c
        return AlgebraElement(self.W, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.W, {x: -c for x, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return AlgebraElement(self.W, {x: c * other for x, c in self.terms.items()})
        self._same(other)
        mul = self.W.mul
        out: dict = {}
        for x, a in self.terms.items():
            for y, b in other.terms.items():
                z = mul(x, y)
                out[z] = out.get(z, 0) + a * b
        return AlgebraElement(self.W, out)

    def __rmul__(self, scalar) -> "AlgebraElement":
        return AlgebraElement(self.W, {x: scalar * c for x, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def commutator(self, other: "AlgebraElement") -> "AlgebraElement":
        return self * other - other * self

    def coefficient(self, x: WreathElement):
        return self.terms.get(x, 0)

    def to_json(self) -> list[dict]:
        out = []
        for x in sorted(self.terms, key=lambda e: (e.perm, e.gvec)):
            d = x.to_json()
            d["coef"] = format_scalar(self.terms[x])
            out.append(d)
        return out

    def __repr__(self) -> str:
        return f"AlgebraElement({len(self.terms)} terms)"


def yjm(W: WreathGroup, i: int) -> AlgebraElement:
    """X_i = sum_{k<i} sum_g (g^-1)^(k) g^(i) (k, i)."""
    if not 1 <= i <= W.n:
        raise ValueError(f"YJM index {i} out of range 1..{W.n}")
    out = {}
    for k in range(1, i):
        perm = W.transposition(k, i).perm
        for g in range(W.G.order):
            gvec = [0] * W.n
            gvec[k - 1] = W.G.inv[g]
            gvec[i - 1] = g
            out[WreathElement(tuple(gvec), perm)] = Fraction(1)
    return AlgebraElement(W, out)


def b_element(W: WreathGroup, i: int) -> AlgebraElement:
    """b_i = sum_g g^(i) (g^-1)^(i+1)."""
    if not 1 <= i < W.n:
        raise ValueError(f"index {i} out of range 1..{W.n - 1}")
    out = {}
    for g in range(W.G.order):
        gvec = [0] * W.n
        gvec[i - 1] = g
        gvec[i] = W.G.inv[g]
        out[W.base(gvec)] = Fraction(1)
    return AlgebraElement(W, out)


def class_sum(W: WreathGroup, rho: WreathType, lam: int, j: int) -> AlgebraElement:
    """c_(rho, lam, j): elements of type rho whose cycle through n has length lam, class j."""
    rho = tuple(sorted(rho))
    if (lam, j) not in rho or sum(k for k, _ in rho) != W.n:
        raise ValueError(f"({rho}, {lam}, {j}) is not in P'_{W.n}(G_*)")
    return AlgebraElement(
        W, {x: Fraction(1) for x in W.elements() if W.type_of(x) == rho and W.last_cycle(x) == (lam, j)}
    )


def all_class_sums(W: WreathGroup) -> dict[tuple[WreathType, int, int], AlgebraElement]:
    """Every c_(rho, lam, j) in one pass over G_n."""
    buckets: dict = {}
    for x in W.elements():
        key = (W.type_of(x), *W.last_cycle(x))
        buckets.setdefault(key, {})[x] = Fraction(1)
    return {key: AlgebraElement(W, buckets.get(key, {})) for key in enumerate_triples(W.n, W.G.num_classes)}


def _trivial_rest(W: WreathGroup, k: int, j: int) -> WreathType:
    return tuple(sorted([(k, j)] + [(1, 0)] * (W.n - k)))


def Y(W: WreathGroup, k: int, j: int) -> AlgebraElement:
    """Sum of nontrivial k-cycles of type j whose support avoids n."""
    if (k, j) == (1, 0) or k >= W.n:
        return AlgebraElement(W)
    return class_sum(W, _trivial_rest(W, k, j), 1, 0)


def Y_prime(W: WreathGroup, k: int, j: int) -> AlgebraElement:
    """Sum of nontrivial k-cycles of type j whose support contains n."""
    if (k, j) == (1, 0):
        return AlgebraElement(W)
    return class_sum(W, _trivial_rest(W, k, j), k, j)


def center_of_base(W: WreathGroup) -> list[AlgebraElement]:
    """Class-sum basis of the centre of C[G^n]: one element per tuple of classes."""
    classes = W.G.classes
    out = []
    for combo in itertools.product(range(len(classes)), repeat=W.n):
        terms = {W.base(g): Fraction(1) for g in itertools.product(*(classes[c] for c in combo))}
        out.append(AlgebraElement(W, terms))
    return out


def generated_dimension(W: WreathGroup, generators: list[AlgebraElement]) -> tuple[int, list[AlgebraElement]]:
    """Dimension (and a basis) of the unital subalgebra generated by ``generators``.

    Iterated product closure: multiply every new basis element by every generator
    until the span stops growing; the span is bounded by |G_n|.
    """
    ech = Echelon()
    one = AlgebraElement.one(W)
    ech.add(one.terms)
    basis, frontier = [one], [one]
    while frontier:
        nxt = []
        for b in frontier:
            for g in generators:
                p = b * g
                if ech.add(p.terms):
                    basis.append(p)
                    nxt.append(p)
                    if len(basis) > W.order:
                        raise AssertionError("span exceeded |G_n|")
        frontier = nxt
    return len(ech), basis


def gz_dimension(W: WreathGroup) -> int:
    """dim of <Z[C[G^n]], X_1, ..., X_n>, by product closure."""
    W.guard("gz_dimension")
    gens = center_of_base(W) + [yjm(W, i) for i in range(2, W.n + 1)]
    dim, _ = generated_dimension(W, gens)
    return dim


def gz_dimension_expected(W: WreathGroup) -> int:
    """sum over Young G-diagrams of the number of standard G-tableaux."""
    t = len(W.G.irreps)
    return sum(len(enumerate_gtableaux(mu)) for mu in enumerate_gdiagrams(W.n, t))


# -- verification suites --------------------------------------------------------


def _witness(diff: AlgebraElement):
    if not diff:
        return None
    x, c = next(iter(sorted(diff.terms.items(), key=lambda kv: (kv[0].perm, kv[0].gvec))))
    return {"element": x.to_json(), "coef": format_scalar(c)}


def _subgroup_generators(W: WreathGroup, m: int) -> list[WreathElement]:
    """Generators of H_{m,n}: all g^(l) and s_i for i < m."""
    gens = [W.g_at(l, g) for l in range(1, W.n + 1) for g in range(1, W.G.order)]
    return gens + [W.s(i) for i in range(1, m)]


def verify_commutant(W: WreathGroup) -> dict:
    """Centraliser of C[H_{n-1,n}] in C[G_n] against the c_(rho, lam, j) basis."""
    W.guard("verify_commutant")
    n = W.n
    gens = _subgroup_generators(W, n - 1)
    elements = list(W.elements())
    equations = []
    for h in gens:
        hinv = W.inv(h)
        for x in elements:
            y = W.mul(W.mul(hinv, x), h)
            if y != x:
                equations.append({x: Fraction(1), y: Fraction(-1)})
    nullity = len(elements) - rank(equations)

    basis = all_class_sums(W)
    triples = list(basis)
    checks = []

    def record(name, ok, **info):
        checks.append({"check": name, "ok": bool(ok), **info})

    record("triple_count", len(triples) == nullity, triples=len(triples), commutant_dim=nullity)
    independent = rank(c.terms for c in basis.values()) == len(triples)
    record("independent", independent)

    gen_elems = [AlgebraElement.of(W, h) for h in gens]
    bad = None
    for key, c in basis.items():
        for h in gen_elems:
            d = c.commutator(h)
            if d:
                bad = {"triple": repr(key), "witness": _witness(d)}
                break
        if bad:
            break
    record("in_commutant", bad is None, first_failure=bad)

    bad = None
    values = list(basis.items())
    for (ka, a), (kb, b) in itertools.combinations(values, 2):
        d = a.commutator(b)
        if d:
            bad = {"pair": [repr(ka), repr(kb)], "witness": _witness(d)}
            break
    record("commutative", bad is None, first_failure=bad)

    # the commutant is generated by the centre of C[H_{n-1,n}] together with X_n
    if n >= 2:
        h_classes = W.conjugacy_classes(generators=gens) if gens else []
        # elements fixing n form a union of H-orbits, and those orbits are the H-classes
        h_classes = [c for c in h_classes if all(x.perm[n - 1] == n - 1 for x in c)]
        centre = [AlgebraElement(W, {x: Fraction(1) for x in c}) for c in h_classes]
        dim, _ = generated_dimension(W, centre + [yjm(W, n)])
        record("generated_by_centre_and_X_n", dim == nullity, generated_dim=dim)
    return {"ok": all(c["ok"] for c in checks), "dimension": nullity, "checks": checks}


def verify_relations(W: WreathGroup) -> dict:
    """Commutation relations among X_i, g^(l) and s_i as exact algebra identities."""
    W.guard("verify_relations")
    n, G = W.n, W.G
    X = {i: yjm(W, i) for i in range(1, n + 1)}
    s = {i: AlgebraElement.of(W, W.s(i)) for i in range(1, n)}
    b = {i: b_element(W, i) for i in range(1, n)}
    gl = {(l, g): AlgebraElement.of(W, W.g_at(l, g)) for l in range(1, n + 1) for g in range(G.order)}
    results: list[dict] = []

    def check(name: str, cases):
        failure = None
        count = 0
        for label, lhs, rhs in cases:
            count += 1
            d = lhs - rhs
            if d:
                failure = {"case": label, "witness": _witness(d)}
                break
        results.append({"relation": name, "ok": failure is None, "cases": count, "first_failure": failure})

    zero = AlgebraElement(W)

    def omega(i, l):
        return i + 1 if l == i else i if l == i + 1 else l

    check("a: X_i X_j = X_j X_i",
          ((f"i={i},j={j}", X[i] * X[j], X[j] * X[i]) for i in range(1, n + 1) for j in range(i + 1, n + 1)))
    check("b: X_i g^(l) = g^(l) X_i",
          ((f"i={i},l={l},g={g}", X[i] * gl[l, g], gl[l, g] * X[i])
           for i in range(1, n + 1) for l in range(1, n + 1) for g in range(G.order)))
    check("c: s_i g^(i) s_i = g^(i+1)",
          ((f"i={i},g={g}", s[i] * gl[i, g] * s[i], gl[i + 1, g]) for i in range(1, n) for g in range(G.order)))
    check("d: s_i g^(l) = g^(l) s_i",
          ((f"i={i},l={l},g={g}", s[i] * gl[l, g], gl[l, g] * s[i])
           for i in range(1, n) for l in range(1, n + 1) if l not in (i, i + 1) for g in range(G.order)))

    def rel_e():
        for i in range(1, n):
            twist = zero
            for g in range(G.order):
                twist = twist + gl[i + 1, g] * s[i] * gl[i + 1, G.inv[g]]
            yield f"i={i}", s[i] * X[i] * s[i] + twist, X[i + 1]

    check("e: s_i X_i s_i + sum_g g^(i+1) s_i (g^-1)^(i+1) = X_{i+1}", rel_e())
    check("f: s_i X_l = X_l s_i",
          ((f"i={i},l={l}", s[i] * X[l], X[l] * s[i]) for i in range(1, n) for l in range(1, n + 1)
           if l not in (i, i + 1)))
    check("t5: X_i s_i = s_i X_{i+1} - b_i",
          ((f"i={i}", X[i] * s[i], s[i] * X[i + 1] - b[i]) for i in range(1, n)))
    check("t5': X_{i+1} s_i = s_i X_i + b_i",
          ((f"i={i}", X[i + 1] * s[i], s[i] * X[i] + b[i]) for i in range(1, n)))
    check("t4: h^(l) b_i = b_i h^(omega_i(l))",
          ((f"i={i},l={l},h={h}", gl[l, h] * b[i], b[i] * gl[omega(i, l), h])
           for i in range(1, n) for l in range(1, n + 1) for h in range(G.order)))
    return {"ok": all(r["ok"] for r in results), "relations": results}


def verify_types(W: WreathGroup) -> dict:
    """Brute-force conjugacy classes against type_of (same partition of G_n)."""
    classes = W.conjugacy_classes()
    ok = True
    witness = None
    seen_types = set()
    for cls in classes:
        types = {W.type_of(x) for x in cls}
        if len(types) != 1 or types & seen_types:
            ok = False
            witness = [x.to_json() for x in cls[:2]]
            break
        seen_types |= types
    expected = len(enumerate_types(W.n, W.G.num_classes))
    return {
        "ok": ok and len(classes) == expected,
        "classes": len(classes),
        "types": expected,
        "witness": witness,
    }

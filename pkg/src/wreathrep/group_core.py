"""The base group G: multiplication table, conjugacy classes and irreducible matrices.

Elements are indices ``0..order-1`` with ``0`` the identity. Classes are numbered from
``0`` with class ``0 == {e}``; irreps are numbered from ``0`` with irrep ``0`` trivial.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .scalars import (
    DEFAULT_TOL,
    Quad,
    conj,
    field_of,
    join_fields,
    parse_exact,
    residual,
)

Matrix = tuple[tuple[object, ...], ...]


class GroupError(ValueError):
    """Malformed group table or irreducible representation data."""


@dataclass(frozen=True)
class Irrep:
    index: int
    dim: int
    matrices: tuple[Matrix, ...]  # one d x d matrix per group element

    def character(self, g: int):
        m = self.matrices[g]
        return sum((m[i][i] for i in range(self.dim)), 0)

    @property
    def kind(self) -> str:
        return join_fields(field_of(x) for m in self.matrices for row in m for x in row)


@dataclass(frozen=True)
class ClassInvolution:
    map: tuple[int, ...]

    def __call__(self, j: int) -> int:
        return self.map[j]


@dataclass(frozen=True)
class GroupTable:
    name: str
    order: int
    mul: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    irreps: tuple[Irrep, ...]
    inv: tuple[int, ...] = field(repr=False, default=())

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1

    @property
    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for g, c in enumerate(self.class_of):
            out[c].append(g)
        return out

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(r.dim for r in self.irreps)

    @property
    def kind(self) -> str:
        return join_fields(r.kind for r in self.irreps)

    def elements(self) -> range:
        return range(self.order)

    def m(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def character_table(self) -> list[list[object]]:
        """Rows indexed by irreps, columns by classes."""
        reps = [cls[0] for cls in self.classes]
        return [[irr.character(g) for g in reps] for irr in self.irreps]


# -- construction -------------------------------------------------------------


def _check_table(mul) -> tuple[int, ...]:
    n = len(mul)
    if n == 0 or any(len(row) != n for row in mul):
        raise GroupError("multiplication table must be a non-empty square")
    for row in mul:
        if any(not (0 <= x < n) for x in row):
            raise GroupError("table entry out of range")
    for a in range(n):
        if mul[0][a] != a or mul[a][0] != a:
            raise GroupError("element 0 is not the identity")
    for row in mul:
        if sorted(row) != list(range(n)):
            raise GroupError("table rows are not permutations (not a Latin square)")
    for col in range(n):
        if sorted(mul[r][col] for r in range(n)) != list(range(n)):
            raise GroupError("table columns are not permutations (not a Latin square)")
    for a, b, c in itertools.product(range(n), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise GroupError(f"not associative at ({a}, {b}, {c})")
    inv = []
    for a in range(n):
        try:
            inv.append(mul[a].index(0))
        except ValueError:
            raise GroupError(f"element {a} has no inverse") from None
    return tuple(inv)


def conjugacy_classes(mul, inv) -> tuple[int, ...]:
    """Orbit partition of conjugation, sorted by (size, minimal element)."""
    n = len(mul)
    seen: dict[int, int] = {}
    orbits: list[list[int]] = []
    for h in range(n):
        if h in seen:
            continue
        orbit = sorted({mul[mul[g][h]][inv[g]] for g in range(n)})
        for x in orbit:
            seen[x] = len(orbits)
        orbits.append(orbit)
    orbits.sort(key=lambda o: (len(o), o[0]))
    class_of = [0] * n
    for idx, orbit in enumerate(orbits):
        for x in orbit:
            class_of[x] = idx
    return tuple(class_of)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(d)), 0) for j in range(d)) for i in range(d)
    )


def _is_trivial(irr: Irrep) -> bool:
    return irr.dim == 1 and all(m[0][0] == 1 for m in irr.matrices)


def verify_group_irreps(G: GroupTable, tol: float = DEFAULT_TOL) -> dict:
    """Check homomorphism, unitarity, character orthogonality and sum of squared dims.

    Never raises; every failing check carries the offending pair and its residual.
    """
    checks = []

    def record(name, ok, worst=0.0, witness=None):
        checks.append({"check": name, "ok": bool(ok), "residual": worst, "witness": witness})

    for irr in G.irreps:
        worst, witness = 0.0, None
        for g, h in itertools.product(range(G.order), repeat=2):
            lhs = _matmul(irr.matrices[g], irr.matrices[h])
            rhs = irr.matrices[G.mul[g][h]]
            r = max(residual(x, y) for lr, rr in zip(lhs, rhs) for x, y in zip(lr, rr))
            if r > worst:
                worst, witness = r, [g, h]
        record(f"homomorphism[{irr.index}]", worst <= tol, worst, witness)

        worst, witness = 0.0, None
        for g in range(G.order):
            m = irr.matrices[g]
            adj = tuple(tuple(conj(m[j][i]) for j in range(irr.dim)) for i in range(irr.dim))
            prod = _matmul(m, adj)
            r = max(
                residual(prod[i][j], 1 if i == j else 0)
                for i in range(irr.dim)
                for j in range(irr.dim)
            )
            if r > worst:
                worst, witness = r, [g]
        record(f"unitary[{irr.index}]", worst <= tol, worst, witness)

    worst, witness = 0.0, None
    for a, b in itertools.product(G.irreps, repeat=2):
        ip = sum((a.character(g) * conj(b.character(g)) for g in range(G.order)), 0)
        ip = ip * Fraction(1, G.order) if not isinstance(ip, complex) else ip / G.order
        r = residual(ip, 1 if a.index == b.index else 0)
        if r > worst:
            worst, witness = r, [a.index, b.index]
    record("character_orthogonality", worst <= tol, worst, witness)

    total = sum(r.dim ** 2 for r in G.irreps)
    record("sum_dim_squared", total == G.order, float(abs(total - G.order)), [total, G.order])
    record("irrep_count", len(G.irreps) == G.num_classes, 0.0, [len(G.irreps), G.num_classes])
    return {"ok": all(c["ok"] for c in checks), "checks": checks}


def make_group(name: str, mul, irreps_data, tol: float = DEFAULT_TOL) -> GroupTable:
    """Validate a table plus irreps and return a GroupTable (trivial irrep moved first)."""
    mul = tuple(tuple(int(x) for x in row) for row in mul)
    inv = _check_table(mul)
    class_of = conjugacy_classes(mul, inv)
    irreps = []
    for dim, mats in irreps_data:
        if len(mats) != len(mul):
            raise GroupError("irrep must give one matrix per element")
        frozen = tuple(tuple(tuple(row) for row in m) for m in mats)
        if any(len(m) != dim or any(len(row) != dim for row in m) for m in frozen):
            raise GroupError("irrep matrix has wrong shape")
        irreps.append((dim, frozen))
    irreps.sort(key=lambda p: not _is_trivial(Irrep(0, p[0], p[1])))
    irreps_t = tuple(Irrep(i, d, m) for i, (d, m) in enumerate(irreps))
    G = GroupTable(name, len(mul), mul, class_of, irreps_t, inv)
    if len(irreps_t) != G.num_classes:
        raise GroupError(f"{len(irreps_t)} irreps but {G.num_classes} conjugacy classes")
    if not irreps_t or not _is_trivial(irreps_t[0]):
        raise GroupError("the trivial representation is missing")
    report = verify_group_irreps(G, tol)
    if not report["ok"]:
        bad = [c for c in report["checks"] if not c["ok"]]
        raise GroupError(f"irreps failed verification: {bad}")
    return G


def inverse_class_involution(G: GroupTable) -> ClassInvolution:
    image: list[int | None] = [None] * G.num_classes
    for g in range(G.order):
        j, jp = G.class_of[g], G.class_of[G.inv[g]]
        if image[j] is None:
            image[j] = jp
        elif image[j] != jp:
            raise GroupError(f"inverse-class map not well defined on class {j}")
    return ClassInvolution(tuple(image))  # type: ignore[arg-type]


# -- builtin groups -----------------------------------------------------------


def _root_of_unity(m: int, k: int):
    """exp(2 pi i k / m) exactly where the field is small, else complex."""
    k %= m
    if m in (1, 2):
        return Fraction(1) if k == 0 else Fraction(-1) ** k
    if m == 4:
        return [Fraction(1), Quad(0, 1, -1), Fraction(-1), Quad(0, -1, -1)][k]
    if m == 3:
        w = Quad(Fraction(-1, 2), Fraction(1, 2), -3)
        return [Fraction(1), w, w * w][k]
    if m == 6:
        w = Quad(Fraction(1, 2), Fraction(1, 2), -3)
        out = Fraction(1)
        for _ in range(k):
            out = out * w
        return out
    import cmath

    return cmath.exp(2j * cmath.pi * k / m)


def cyclic_group(m: int) -> GroupTable:
    if m < 1:
        raise GroupError("cyclic order must be positive")
    mul = [[(a + b) % m for b in range(m)] for a in range(m)]
    irreps = [(1, [((_root_of_unity(m, j * k),),) for k in range(m)]) for j in range(m)]
    return make_group(f"cyclic:{m}", mul, irreps)


def trivial_group() -> GroupTable:
    G = cyclic_group(1)
    return GroupTable("trivial", G.order, G.mul, G.class_of, G.irreps, G.inv)


def symmetric3() -> GroupTable:
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    mul = [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]
    half, r3 = Fraction(1, 2), Quad(0, Fraction(1, 2), 3)
    rot = ((-half, -r3), (r3, -half))
    flip = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(-1)))
    ident = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    s, c = index[(1, 0, 2)], index[(1, 2, 0)]
    mats: dict[int, Matrix] = {0: ident}
    frontier = [0]
    while frontier:
        nxt = []
        for g in frontier:
            for gen, gm in ((s, flip), (c, rot)):
                h = mul[g][gen]
                if h not in mats:
                    mats[h] = _matmul(mats[g], gm)
                    nxt.append(h)
        frontier = nxt

    def sign(p):
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        return Fraction((-1) ** inversions)

    irreps = [
        (1, [((Fraction(1),),) for _ in perms]),
        (1, [((sign(p),),) for p in perms]),
        (2, [mats[i] for i in range(6)]),
    ]
    return make_group("sym:3", mul, irreps)


def load_group_file(path: str | Path) -> GroupTable:
    data = json.loads(Path(path).read_text())
    return group_from_json(data, name=str(path))


def group_from_json(data: dict, name: str = "file") -> GroupTable:
    try:
        order = int(data["order"])
        mul = data["mul"]
        raw_irreps = data["irreps"]
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupError(f"malformed group file: {exc}") from None
    if len(mul) != order:
        raise GroupError("order does not match table size")
    irreps = []
    for irr in raw_irreps:
        dim = int(irr["dim"])
        mats = []
        for m in irr["matrices"]:
            rows = []
            for row in m:
                entries = []
                for entry in row:
                    entries.append(_parse_entry(entry))
                rows.append(entries)
            mats.append(rows)
        kind = join_fields(field_of(x) for m in mats for row in m for x in row)
        if kind == "complex":
            mats = [[[complex(x) for x in row] for row in m] for m in mats]
        irreps.append((dim, mats))
    return make_group(name, mul, irreps)


def load_group(spec: str) -> GroupTable:
    """Builtin name ("trivial", "cyclic:m", "sym:3") or path to a JSON group file."""
    if spec == "trivial":
        return trivial_group()
    if spec.startswith("cyclic:"):
        try:
            m = int(spec.split(":", 1)[1])
        except ValueError:
            raise GroupError(f"bad cyclic order in {spec!r}") from None
        return cyclic_group(m)
    if spec in ("sym:3", "S3"):
        return symmetric3()
    if Path(spec).is_file():
        return load_group_file(spec)
    raise GroupError(f"unknown group spec {spec!r}")


def _parse_entry(entry):
    re_part, im_part = (parse_exact(x) for x in entry)
    if isinstance(re_part, complex) or isinstance(im_part, complex):
        return complex(re_part) + 1j * complex(im_part)
    if im_part == 0:
        return re_part
    if isinstance(re_part, Quad) or isinstance(im_part, Quad):
        return complex(re_part) + 1j * complex(im_part)
    return Quad.make(re_part, im_part, -1)


def group_to_json(G: GroupTable) -> dict:
    """Group file form; exact where the entry is a Gaussian rational or real, else decimal."""
    from .scalars import format_scalar

    def entry(x):
        if isinstance(x, Quad) and x.d == -1:
            return [format_scalar(x.a), format_scalar(x.b)]
        if isinstance(x, Quad) and x.d < 0 or isinstance(x, complex):
            z = complex(x)
            return [z.real, z.imag]
        return [format_scalar(x), "0"]

    return {
        "order": G.order,
        "mul": [list(r) for r in G.mul],
        "irreps": [
            {"dim": irr.dim, "matrices": [[[entry(x) for x in row] for row in m] for m in irr.matrices]}
            for irr in G.irreps
        ],
    }


__all__ = [
    "ClassInvolution",
    "GroupError",
    "GroupTable",
    "Irrep",
    "conjugacy_classes",
    "cyclic_group",
    "group_from_json",
    "group_to_json",
    "inverse_class_involution",
    "load_group",
    "make_group",
    "symmetric3",
    "trivial_group",
    "verify_group_irreps",
]

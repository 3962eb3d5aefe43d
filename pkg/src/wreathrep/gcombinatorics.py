"""Young G-diagrams, standard Young G-tableaux and content vectors.

Internally everything is 0-based: irreps ``sigma`` in ``0..t-1``, rows and columns
from ``0``. Numbers written in the boxes are ``1..n`` and Coxeter indices ``i`` refer
to the transposition ``(i, i+1)`` of those numbers. JSON output is 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial

from .group_core import GroupTable

Partition = tuple[int, ...]
Cell = tuple[int, int, int]  # (sigma, row, col)


def is_partition(parts) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def partitions(n: int, max_part: int | None = None):
    """Partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def inner_corners(p: Partition) -> list[int]:
    """Rows whose last box can be removed."""
    return [r for r in range(len(p)) if r == len(p) - 1 or p[r] > p[r + 1]]


def outer_corners(p: Partition) -> list[int]:
    """Rows where a box can be added (row == len(p) means a new row)."""
    return [r for r in range(len(p) + 1) if r == 0 or p[r - 1] > (p[r] if r < len(p) else 0)]


def remove_box(p: Partition, row: int) -> Partition:
    q = list(p)
    q[row] -= 1
    return tuple(x for x in q if x)


def add_box(p: Partition, row: int) -> Partition:
    q = list(p)
    if row == len(q):
        q.append(1)
    else:
        q[row] += 1
    return tuple(q)


def hook_length_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape p."""
    n = sum(p)
    conj = [sum(1 for x in p if x > c) for c in range(p[0])] if p else []
    hooks = 1
    for r, length in enumerate(p):
        for c in range(length):
            hooks *= (length - c - 1) + (conj[c] - r - 1) + 1
    return factorial(n) // hooks


def content(row: int, col: int) -> int:
    """Column index minus row index (any consistent base)."""
    return col - row


@dataclass(frozen=True, order=True)
class GYoungDiagram:
    shapes: tuple[Partition, ...]

    def __post_init__(self):
        if not all(is_partition(p) for p in self.shapes):
            raise ValueError(f"not a tuple of partitions: {self.shapes}")

    @property
    def t(self) -> int:
        return len(self.shapes)

    @property
    def size(self) -> int:
        return sum(sum(p) for p in self.shapes)

    def boxes(self, sigma: int) -> int:
        return sum(self.shapes[sigma])

    def cells(self) -> list[Cell]:
        return [(s, r, c) for s, p in enumerate(self.shapes) for r, ln in enumerate(p) for c in range(ln)]

    def to_json(self) -> dict:
        return {str(s + 1): list(p) for s, p in enumerate(self.shapes)}

    @classmethod
    def from_json(cls, data, t: int) -> "GYoungDiagram":
        """Accept {"1": [2,1], ...} (1-based sigma keys) or a list of t partitions."""
        if isinstance(data, dict):
            shapes = [()] * t
            for key, parts in data.items():
                s = int(key) - 1
                if not 0 <= s < t:
                    raise ValueError(f"irrep index {key} out of range 1..{t}")
                shapes[s] = tuple(int(x) for x in parts)
        else:
            if len(data) != t:
                raise ValueError(f"expected {t} partitions, got {len(data)}")
            shapes = [tuple(int(x) for x in parts) for parts in data]
        return cls(tuple(shapes))

    def __str__(self) -> str:
        return "|".join(",".join(map(str, p)) or "-" for p in self.shapes)


def enumerate_gdiagrams(n: int, t: int) -> list[GYoungDiagram]:
    """All Young G-diagrams with n boxes over t irreps."""
    if t < 1:
        raise ValueError("t must be positive")

    def rec(remaining: int, slots: int):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for k in range(remaining, -1, -1):
            for p in partitions(k):
                for rest in rec(remaining - k, slots - 1):
                    yield (p,) + rest

    return [GYoungDiagram(s) for s in rec(n, t)]


@dataclass(frozen=True)
class GTableau:
    """A filling of ``shape``: ``cells[i-1]`` is the box holding number i."""

    shape: GYoungDiagram
    cells: tuple[Cell, ...]

    @property
    def n(self) -> int:
        return len(self.cells)

    @cached_property
    def entry_at(self) -> dict[Cell, int]:
        return {cell: i + 1 for i, cell in enumerate(self.cells)}

    def box(self, i: int) -> Cell:
        return self.cells[i - 1]

    def label(self, i: int) -> int:
        """r_T(i): the irrep whose diagram holds i."""
        return self.cells[i - 1][0]

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cells)

    def content_of(self, i: int) -> int:
        _, r, c = self.cells[i - 1]
        return content(r, c)

    def is_standard(self) -> bool:
        if sorted(self.cells) != sorted(self.shape.cells()):
            return False
        at = self.entry_at
        for (s, r, c), k in at.items():
            right, below = at.get((s, r, c + 1)), at.get((s, r + 1, c))
            if right is not None and right < k or below is not None and below < k:
                return False
        return True

    def swap(self, i: int) -> "GTableau":
        """Exchange i and i+1."""
        cells = list(self.cells)
        cells[i - 1], cells[i] = cells[i], cells[i - 1]
        return GTableau(self.shape, tuple(cells))

    def rows(self, sigma: int) -> list[list[int]]:
        at = self.entry_at
        return [[at[(sigma, r, c)] for c in range(ln)] for r, ln in enumerate(self.shape.shapes[sigma])]

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "entries": [[s + 1, r + 1, c + 1] for s, r, c in self.cells],
        }

    def __str__(self) -> str:
        parts = []
        for s in range(self.shape.t):
            rows = self.rows(s)
            parts.append("/".join(" ".join(map(str, row)) for row in rows) or "-")
        return " | ".join(parts)


def enumerate_gtableaux(mu: GYoungDiagram) -> list[GTableau]:
    """All standard fillings of mu, ordered lexicographically by the box of 1, 2, ..."""
    n = mu.size
    out: list[GTableau] = []

    def rec(current: list[Partition], cells: list[Cell]):
        if len(cells) == n:
            out.append(GTableau(mu, tuple(cells)))
            return
        for s in range(mu.t):
            p = current[s]
            for row in outer_corners(p):
                q = add_box(p, row)
                if len(q) > len(mu.shapes[s]) or any(a > b for a, b in zip(q, mu.shapes[s])):
                    continue
                col = q[row] - 1
                current[s] = q
                cells.append((s, row, col))
                rec(current, cells)
                cells.pop()
                current[s] = p

    rec([()] * mu.t, [])
    out.sort(key=lambda T: T.cells)
    return out


def count_gtableaux(mu: GYoungDiagram) -> int:
    """multinomial(n; n_1..n_t) * prod f^{mu_i}."""
    n = mu.size
    total = factorial(n)
    for p in mu.shapes:
        total //= factorial(sum(p))
    for p in mu.shapes:
        total *= hook_length_count(p)
    return total


def row_major_tableau(mu: GYoungDiagram) -> GTableau:
    return GTableau(mu, tuple(mu.cells()))


def tableau_length(T: GTableau) -> int:
    """Inversion count of the permutation carrying the row-major tableau R to T."""
    R = row_major_tableau(T.shape)
    at = T.entry_at
    s = [at[R.box(k)] for k in range(1, T.n + 1)]
    return sum(1 for a in range(len(s)) for b in range(a + 1, len(s)) if s[a] > s[b])


def is_admissible(T: GTableau, i: int) -> bool:
    if not 1 <= i < T.n:
        raise ValueError(f"Coxeter index {i} out of range for n={T.n}")
    s1, r1, c1 = T.box(i)
    s2, r2, c2 = T.box(i + 1)
    if s1 != s2:
        return True
    return r1 != r2 and c1 != c2


def path_from_R(T: GTableau) -> list[int]:
    """Coxeter indices i_1, ..., i_l: applying s_{i_1}, then s_{i_2}, ... to R gives T.

    Built by the bubbling procedure that moves m into R's box of m for m = n..2; every
    step is an admissible transposition.
    """
    R = row_major_tableau(T.shape)
    current = T
    to_R: list[int] = []
    for m in range(T.n, 1, -1):
        i = current.entry_at[R.box(m)]
        for k in range(i, m):
            if not is_admissible(current, k):
                raise AssertionError(f"non-admissible step {k} while bubbling {T}")
            current = current.swap(k)
            to_R.append(k)
    assert current == R
    return to_R[::-1]


# -- content vectors --------------------------------------------------------


@dataclass(frozen=True)
class ContentVector:
    labels: tuple[int, ...]
    values: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def swap(self, i: int) -> "ContentVector":
        lab, val = list(self.labels), list(self.values)
        lab[i - 1], lab[i] = lab[i], lab[i - 1]
        val[i - 1], val[i] = val[i], val[i - 1]
        return ContentVector(tuple(lab), tuple(val))

    def to_json(self) -> dict:
        from .scalars import format_scalar

        return {"labels": [s + 1 for s in self.labels], "values": [format_scalar(v) for v in self.values]}


def phi(T: GTableau, G: GroupTable) -> ContentVector:
    values = tuple(Fraction(G.order, G.dims[T.label(i)]) * T.content_of(i) for i in range(1, T.n + 1))
    return ContentVector(T.labels, values)


def _check_integer_content(seq: list[int]) -> str | None:
    """Reason the sequence is not a content vector, or None."""
    for i, a in enumerate(seq):
        if i == 0:
            if a != 0:
                return "first value is not 0"
            continue
        prev = seq[:i]
        if a > 0 and a - 1 not in prev:
            return f"position {i + 1}: {a} not preceded by {a - 1}"
        if a < 0 and a + 1 not in prev:
            return f"position {i + 1}: {a} not preceded by {a + 1}"
    for i, a in enumerate(seq):
        for j in range(i + 1, len(seq)):
            if seq[j] == a:
                between = seq[i + 1 : j]
                if a - 1 not in between or a + 1 not in between:
                    return f"positions {i + 1},{j + 1}: value {a} repeats without {a - 1} and {a + 1} between"
                break
    return None


def _components(labels, values, G: GroupTable):
    """Rescaled subsequence for each irrep; None entries mean non-integral values."""
    comps: dict[int, list] = {}
    for s, a in zip(labels, values):
        x = Fraction(a) * Fraction(G.dims[s], G.order)
        comps.setdefault(s, []).append(int(x) if x.denominator == 1 else None)
    return comps


def content_vector_violation(labels, values, G: GroupTable) -> str | None:
    if len(labels) != len(values):
        return "labels and values differ in length"
    if any(not 0 <= s < len(G.irreps) for s in labels):
        return "label out of range"
    for s, seq in _components(labels, values, G).items():
        if any(x is None for x in seq):
            return f"irrep {s + 1}: rescaled value is not an integer"
        why = _check_integer_content(seq)
        if why:
            return f"irrep {s + 1}: {why}"
    return None


def is_content_vector_G(labels, values, G: GroupTable) -> bool:
    return content_vector_violation(labels, values, G) is None


def is_content_vector(seq) -> bool:
    """Plain integer content vector (trivial group)."""
    return _check_integer_content(list(seq)) is None


def phi_inverse(cv: ContentVector, G: GroupTable) -> GTableau:
    why = content_vector_violation(cv.labels, cv.values, G)
    if why:
        raise ValueError(f"not a content vector with respect to {G.name}: {why}")
    t = len(G.irreps)
    seen: dict[tuple[int, int], int] = {}
    cells: list[Cell] = []
    for s, a in zip(cv.labels, cv.values):
        c = int(Fraction(a) * Fraction(G.dims[s], G.order))
        k = seen.get((s, c), 0)
        seen[(s, c)] = k + 1
        row, col = (k, k + c) if c >= 0 else (k - c, k)
        cells.append((s, row, col))
    shapes = []
    for s in range(t):
        rows: dict[int, int] = {}
        for ss, r, c in cells:
            if ss == s:
                rows[r] = max(rows.get(r, 0), c + 1)
        shapes.append(tuple(rows[r] for r in range(len(rows))) if rows else ())
    try:
        mu = GYoungDiagram(tuple(shapes))
    except ValueError as exc:
        raise ValueError(f"content vector does not fill a Young G-diagram: {exc}") from None
    T = GTableau(mu, tuple(cells))
    if not T.is_standard():
        raise ValueError("content vector does not give a standard filling")
    return T


def brute_force_content_vectors_G(n: int, G: GroupTable) -> set[ContentVector]:
    """cont_G(n) by exhaustive search over labels and the integer grid |a| <= (n-1)|G|."""
    t = len(G.irreps)
    bound = (n - 1) * G.order
    grid = range(-bound, bound + 1)
    out = set()
    # prune with the definition itself: a_1 = 0 and d/|G| * a integral
    allowed = [[v for v in grid if (v * G.dims[s]) % G.order == 0] for s in range(t)]
    for labels in itertools.product(range(t), repeat=n):
        choices = [[0]] + [allowed[s] for s in labels[1:]] if n else []
        for values in itertools.product(*choices):
            if is_content_vector_G(labels, values, G):
                out.add(ContentVector(labels, tuple(Fraction(v) for v in values)))
    return out


def admissible_for_content(cv: ContentVector, i: int, G: GroupTable) -> bool:
    s1, s2 = cv.labels[i - 1], cv.labels[i]
    if s1 != s2:
        return True
    step = Fraction(G.order, G.dims[s1])
    return cv.values[i - 1] not in (cv.values[i] + step, cv.values[i] - step)


def components(nodes, neighbours) -> list[set]:
    """Connected components (union-find) of a graph given by a neighbour function."""
    parent = {x: x for x in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in nodes:
        for y in neighbours(x):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    groups: dict = {}
    for x in nodes:
        groups.setdefault(find(x), set()).add(x)
    return list(groups.values())


def tableau_neighbours(T: GTableau) -> list[GTableau]:
    return [T.swap(i) for i in range(1, T.n) if is_admissible(T, i)]


def tableau_from_rows(rows_by_sigma: list[list[list[int]]]) -> GTableau:
    """Build a tableau from explicit rows per irrep, e.g. [[[1, 2], [3]]]."""
    shapes = tuple(tuple(len(r) for r in rows) for rows in rows_by_sigma)
    n = sum(sum(p) for p in shapes)
    cells: list[Cell | None] = [None] * n
    for s, rows in enumerate(rows_by_sigma):
        for r, row in enumerate(rows):
            for c, k in enumerate(row):
                cells[k - 1] = (s, r, c)
    T = GTableau(GYoungDiagram(shapes), tuple(cells))  # type: ignore[arg-type]
    if not T.is_standard():
        raise ValueError("rows do not form a standard tableau")
    return T

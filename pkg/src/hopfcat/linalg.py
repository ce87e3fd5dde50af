"""Dense exact matrices and tensor-index bookkeeping.

Conventions used verbatim by every structure-constant module:

- A ``LinMap`` stores ``entries[r][c]`` with ``r`` indexing the codomain and
  ``c`` the domain; ``f @ g`` is composition f after g.
- Tensor factors flatten row-major with the LEFTMOST factor slowest: the pair
  (i, k) over dims (d1, d2) flattens to ``i*d2 + k``.  ``kron`` and
  ``swap_map`` follow this convention, fixed once for the whole library.

Everything is exact; results re-verify by multiplication to identical scalars.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalars import Field, FieldMismatchError


@dataclass(frozen=True)
class TensorIndex:
    """Row-major flattening of a tuple of factor dimensions."""

    factor_dims: tuple[int, ...]

    @property
    def total(self) -> int:
        n = 1
        for d in self.factor_dims:
            n *= d
        return n

    def flatten(self, multi) -> int:
        if len(multi) != len(self.factor_dims):
            raise ValueError("multi-index arity mismatch")
        flat = 0
        for i, d in zip(multi, self.factor_dims):
            if not 0 <= i < d:
                raise ValueError(f"index {i} out of range [0,{d})")
            flat = flat * d + i
        return flat

    def unflatten(self, flat: int) -> tuple[int, ...]:
        if not 0 <= flat < self.total:
            raise ValueError(f"flat index {flat} out of range [0,{self.total})")
        out = []
        for d in reversed(self.factor_dims):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))

    def __iter__(self):
        return itertools.product(*(range(d) for d in self.factor_dims))


@dataclass(frozen=True)
class NotInvertible:
    """Returned when inversion fails; carries the rank actually achieved."""

    rank: int
    rows: int
    cols: int


class LinMap:
    """An exact linear map in a fixed pair of bases."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, rows: int, cols: int, entries):
        entries = tuple(tuple(r) for r in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError(
                f"entry array is not {rows}x{cols}: "
                f"{len(entries)} rows of lengths {[len(r) for r in entries]}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinMap":
        one, zero = field.one, field.zero
        return cls(field, n, n,
                   [[one if i == j else zero for j in range(n)]
                    for i in range(n)])

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "LinMap":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def column(cls, field: Field, vec) -> "LinMap":
        return cls(field, len(vec), 1, [[v] for v in vec])

    @classmethod
    def row(cls, field: Field, covec) -> "LinMap":
        return cls(field, 1, len(covec), [list(covec)])

    def col(self, j: int) -> list:
        return [self.entries[r][j] for r in range(self.rows)]

    def apply(self, vec) -> list:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match domain")
        out = [self.field.zero] * self.rows
        for c, v in enumerate(vec):
            if v:
                for r in range(self.rows):
                    a = self.entries[r][c]
                    if a:
                        out[r] = out[r] + a * v
        return out

    def _check_field(self, other: "LinMap"):
        if self.field != other.field:
            raise FieldMismatchError(
                f"cannot combine maps over {self.field} and {other.field}")

    def __matmul__(self, other: "LinMap") -> "LinMap":
        """Composition self after other (matrix product)."""
        self._check_field(other)
        if self.cols != other.rows:
            raise ValueError(
                f"composition dims mismatch: {self.rows}x{self.cols} after "
                f"{other.rows}x{other.cols}")
        zero = self.field.zero
        out = [[zero] * other.cols for _ in range(self.rows)]
        a, b = self.entries, other.entries
        for k in range(other.rows):
            ak_col = [a[r][k] for r in range(self.rows)]
            if not any(ak_col):
                continue
            bk = b[k]
            for j in range(other.cols):
                v = bk[j]
                if v:
                    for r in range(self.rows):
                        if ak_col[r]:
                            out[r][j] = out[r][j] + ak_col[r] * v
        return LinMap(self.field, self.rows, other.cols, out)

    def __add__(self, other: "LinMap") -> "LinMap":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in sum")
        return LinMap(self.field, self.rows, self.cols,
                      [[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "LinMap") -> "LinMap":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in difference")
        return LinMap(self.field, self.rows, self.cols,
                      [[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.entries, other.entries)])

    def scale(self, s) -> "LinMap":
        return LinMap(self.field, self.rows, self.cols,
                      [[s * v for v in r] for r in self.entries])

    def kron(self, other: "LinMap") -> "LinMap":
        """Tensor product on bases, leftmost factor slowest."""
        self._check_field(other)
        zero = self.field.zero
        rows, cols = self.rows * other.rows, self.cols * other.cols
        out = [[zero] * cols for _ in range(rows)]
        for i, ra in enumerate(self.entries):
            for j, a in enumerate(ra):
                if a:
                    ri, cj = i * other.rows, j * other.cols
                    for k, rb in enumerate(other.entries):
                        for l, bv in enumerate(rb):
                            if bv:
                                out[ri + k][cj + l] = a * bv
        return LinMap(self.field, rows, cols, out)

    def transpose(self) -> "LinMap":
        return LinMap(self.field, self.cols, self.rows,
                      [[self.entries[r][c] for r in range(self.rows)]
                       for c in range(self.cols)])

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"LinMap({self.rows}x{self.cols} over {self.field})"


def kron(f: LinMap, g: LinMap) -> LinMap:
    return f.kron(g)


def kron_all(maps) -> LinMap:
    out = None
    for m in maps:
        out = m if out is None else out.kron(m)
    if out is None:
        raise ValueError("empty tensor product")
    return out


def swap_map(field: Field, d1: int, d2: int) -> LinMap:
    """The flip A⊗B → B⊗A on bases (the symmetric braiding of k-modules)."""
    zero, one = field.zero, field.one
    out = [[zero] * (d1 * d2) for _ in range(d1 * d2)]
    for i in range(d1):
        for k in range(d2):
            out[k * d1 + i][i * d2 + k] = one
    return LinMap(field, d1 * d2, d1 * d2, out)


def _rref(field: Field, rows):
    """Reduced row echelon form in place; returns (rows, pivot_cols)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        if pv != field.one:
            rows[r] = [v / pv for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def echelon_basis(field: Field, vectors) -> list[tuple]:
    """Canonical (reduced echelon) basis of the span of the given vectors."""
    vectors = [list(v) for v in vectors if any(v)]
    if not vectors:
        return []
    rows, pivots = _rref(field, vectors)
    return [tuple(rows[i]) for i in range(len(pivots))]


def rank_kernel(f: LinMap) -> tuple[int, list[tuple]]:
    """Exact rank and a canonical reduced-echelon basis of the kernel."""
    if f.cols == 0:
        return 0, []
    if f.rows == 0:
        # Everything is in the kernel; canonical basis is the standard one.
        one, zero = f.field.one, f.field.zero
        basis = [tuple(one if i == j else zero for i in range(f.cols))
                 for j in range(f.cols)]
        return 0, basis
    rows, pivots = _rref(f.field, f.entries)
    rank = len(pivots)
    pivot_set = set(pivots)
    free = [c for c in range(f.cols) if c not in pivot_set]
    zero, one = f.field.zero, f.field.one
    raw = []
    for fc in free:
        v = [zero] * f.cols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        raw.append(v)
    return rank, echelon_basis(f.field, raw)


def rank(f: LinMap) -> int:
    return rank_kernel(f)[0]


def invert(f: LinMap):
    """Exact inverse, or NotInvertible carrying the rank."""
    if f.rows != f.cols:
        return NotInvertible(rank(f), f.rows, f.cols)
    n = f.rows
    if n == 0:
        return LinMap(f.field, 0, 0, [])
    aug = [list(r) + list(i)
           for r, i in zip(f.entries, LinMap.identity(f.field, n).entries)]
    rows, pivots = _rref(f.field, aug)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        return NotInvertible(rank(f), n, n)
    return LinMap(f.field, n, n, [r[n:] for r in rows])


def solve(a: LinMap, b: LinMap):
    """Exact solution X of a @ X = b, or None if the system is inconsistent.

    When a has full column rank the solution is unique; that is the only case
    the library relies on.
    """
    a._check_field(b)
    if a.rows != b.rows:
        raise ValueError("incompatible shapes in solve")
    if a.cols == 0:
        return LinMap(a.field, 0, b.cols, []) if b.is_zero() else None
    aug = [list(ra) + list(rb) for ra, rb in zip(a.entries, b.entries)]
    rows, pivots = _rref(a.field, aug)
    if any(p >= a.cols for p in pivots):
        return None  # a pivot in the right block: inconsistent
    zero = a.field.zero
    out = [[zero] * b.cols for _ in range(a.cols)]
    for i, pc in enumerate(pivots):
        for j in range(b.cols):
            out[pc][j] = rows[i][a.cols + j]
    # Reject underdetermined systems only if the candidate fails to verify.
    cand = LinMap(a.field, a.cols, b.cols, out)
    return cand if a @ cand == b else None

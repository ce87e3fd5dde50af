"""Dual Hopf categories: per-pair algebras with cocomposition across objects.

A ``DualHopfCatData`` stores, for each ordered pair, a unital algebra C(x,y)
(mult tensor ``alg`` and unit vector), cocomposition tensors

    cocomp[x,y,z][k][a][b]:  delta(f(x,z)_k) = sum  T[k][a][b] f(x,y)_a ⊗ f(y,z)_b,

counit covectors per object on C(x,x), and optional antipode matrices
S(x,y): C(y,x) → C(x,y).

``dualize`` passes to coordinate duals of the chosen bases, so dualizing twice
is literal identity of data: C(x,y) = A(y,x)* carries the opposite convolution
product of A's comultiplication, the cocomposition is the transpose of A's
composition tensor with the two output legs swapped, the unit of C(x,y) is
A's counit covector at (y,x), the counit at x is evaluation at A's unit, and
the antipode is the transpose of A's.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .core import HopfCatData, MalformedDataError, MissingAntipodeError
from .linalg import LinMap, swap_map
from .report import Report, check_map_equal
from .scalars import Field


@dataclass
class DualHopfCatData:
    field: Field
    objects: tuple[str, ...]
    dims: dict[tuple[str, str], int]
    alg: dict[tuple[str, str], list]           # mult tensor of C(x,y)
    unit: dict[tuple[str, str], list]          # unit vector of C(x,y)
    cocomp: dict[tuple[str, str, str], list]   # T[k][a][b]
    counit: dict[str, list]                    # covector on C(x,x)
    antipode: dict[tuple[str, str], list] | None = None

    def dim(self, x: str, y: str) -> int:
        return self.dims[(x, y)]

    @property
    def has_antipode(self) -> bool:
        return self.antipode is not None

    def validate_shape(self):
        X = self.objects
        if len(set(X)) != len(X):
            raise MalformedDataError("duplicate object labels")
        for x in X:
            for y in X:
                d = self.dims.get((x, y))
                if d is None or d < 0:
                    raise MalformedDataError(f"missing dim({x},{y})")
                t = self.alg.get((x, y))
                if t is None or len(t) != d or any(
                        len(p) != d or any(len(q) != d for q in p) for p in t):
                    raise MalformedDataError(f"algebra tensor at ({x},{y}) malformed")
                if len(self.unit.get((x, y), ())) != d:
                    raise MalformedDataError(f"unit vector at ({x},{y}) malformed")
        for x in X:
            for y in X:
                for z in X:
                    t = self.cocomp.get((x, y, z))
                    dk, da, db = self.dim(x, z), self.dim(x, y), self.dim(y, z)
                    if t is None or len(t) != dk or any(
                            len(p) != da or any(len(q) != db for q in p)
                            for p in t):
                        raise MalformedDataError(
                            f"cocomposition tensor at ({x},{y},{z}) malformed")
        for x in X:
            if len(self.counit.get(x, ())) != self.dim(x, x):
                raise MalformedDataError(f"counit at {x} malformed")
        if self.antipode is not None:
            for x in X:
                for y in X:
                    m = self.antipode.get((x, y))
                    if m is None or len(m) != self.dim(x, y) or any(
                            len(r) != self.dim(y, x) for r in m):
                        raise MalformedDataError(
                            f"dual antipode at ({x},{y}) malformed")

    # -- structure maps --------------------------------------------------------

    def identity_map(self, x: str, y: str) -> LinMap:
        return LinMap.identity(self.field, self.dim(x, y))

    def alg_map(self, x: str, y: str) -> LinMap:
        d = self.dim(x, y)
        zero = self.field.zero
        out = [[zero] * (d * d) for _ in range(d)]
        t = self.alg[(x, y)]
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    out[k][i * d + j] = t[i][j][k]
        return LinMap(self.field, d, d * d, out)

    def unit_map(self, x: str, y: str) -> LinMap:
        return LinMap.column(self.field, self.unit[(x, y)])

    def cocomp_map(self, x: str, y: str, z: str) -> LinMap:
        """C(x,z) → C(x,y)⊗C(y,z)."""
        dk, da, db = self.dim(x, z), self.dim(x, y), self.dim(y, z)
        zero = self.field.zero
        out = [[zero] * dk for _ in range(da * db)]
        t = self.cocomp[(x, y, z)]
        for k in range(dk):
            for a_ in range(da):
                for b_ in range(db):
                    out[a_ * db + b_][k] = t[k][a_][b_]
        return LinMap(self.field, da * db, dk, out)

    def counit_map(self, x: str) -> LinMap:
        return LinMap.row(self.field, self.counit[x])

    def antipode_map(self, x: str, y: str) -> LinMap:
        """S(x,y): C(y,x) → C(x,y)."""
        if self.antipode is None:
            raise MissingAntipodeError("dual data carries no antipode")
        return LinMap(self.field, self.dim(x, y), self.dim(y, x),
                      self.antipode[(x, y)])

    def strip_antipode(self) -> "DualHopfCatData":
        return replace(self, antipode=None)


def verify_dual(c: DualHopfCatData) -> Report:
    """All dual-category axioms as exact identities: per-pair unital algebras,
    coassociative counital cocomposition, cocomposition and counits being
    algebra maps, and — if present — both dual antipode identities."""
    c.validate_shape()
    rep = Report()
    X = c.objects

    for x in X:
        for y in X:
            m = c.alg_map(x, y)
            ident = c.identity_map(x, y)
            check_map_equal(rep, "alg-assoc", (x, y),
                            m @ m.kron(ident), m @ ident.kron(m))
            check_map_equal(rep, "alg-unit-left", (x, y),
                            m @ c.unit_map(x, y).kron(ident), ident)
            check_map_equal(rep, "alg-unit-right", (x, y),
                            m @ ident.kron(c.unit_map(x, y)), ident)

    for x in X:
        for y in X:
            for z in X:
                for u in X:
                    lhs = c.cocomp_map(x, y, z).kron(c.identity_map(z, u)) \
                        @ c.cocomp_map(x, z, u)
                    rhs = c.identity_map(x, y).kron(c.cocomp_map(y, z, u)) \
                        @ c.cocomp_map(x, y, u)
                    check_map_equal(rep, "cocomp-coassoc", (x, y, z, u),
                                    lhs, rhs)
    for x in X:
        for y in X:
            ident = c.identity_map(x, y)
            check_map_equal(rep, "cocomp-counit-left", (x, y),
                            c.counit_map(x).kron(ident)
                            @ c.cocomp_map(x, x, y), ident)
            check_map_equal(rep, "cocomp-counit-right", (x, y),
                            ident.kron(c.counit_map(y))
                            @ c.cocomp_map(x, y, y), ident)

    for x in X:
        for y in X:
            for z in X:
                # cocomposition is an algebra map into the componentwise
                # product on C(x,y)⊗C(y,z)
                da, db = c.dim(x, y), c.dim(y, z)
                cc = c.cocomp_map(x, y, z)
                pair_mult = c.alg_map(x, y).kron(c.alg_map(y, z)) \
                    @ c.identity_map(x, y).kron(swap_map(c.field, db, da)) \
                    .kron(c.identity_map(y, z))
                check_map_equal(rep, "cocomp-mult", (x, y, z),
                                cc @ c.alg_map(x, z), pair_mult @ cc.kron(cc))
                check_map_equal(rep, "cocomp-unit", (x, y, z),
                                cc @ c.unit_map(x, z),
                                c.unit_map(x, y).kron(c.unit_map(y, z)))
    for x in X:
        check_map_equal(rep, "counit-mult", (x,),
                        c.counit_map(x) @ c.alg_map(x, x),
                        c.counit_map(x).kron(c.counit_map(x)))
        check_map_equal(rep, "counit-unit", (x,),
                        c.counit_map(x) @ c.unit_map(x, x),
                        LinMap.identity(c.field, 1))

    if c.antipode is not None:
        for x in X:
            for y in X:
                cc = c.cocomp_map(x, y, x)   # C(x,x) → C(x,y)⊗C(y,x)
                lhs1 = c.alg_map(x, y) \
                    @ c.identity_map(x, y).kron(c.antipode_map(x, y)) @ cc
                rhs1 = c.unit_map(x, y) @ c.counit_map(x)
                check_map_equal(rep, "dual-antipode-left", (x, y), lhs1, rhs1)
                lhs2 = c.alg_map(y, x) \
                    @ c.antipode_map(y, x).kron(c.identity_map(y, x)) @ cc
                rhs2 = c.unit_map(y, x) @ c.counit_map(x)
                check_map_equal(rep, "dual-antipode-right", (x, y), lhs2, rhs2)
    return rep


def dualize(a: HopfCatData) -> DualHopfCatData:
    """Coordinate-dual of a (semi-)Hopf category on the dual bases."""
    a.validate_shape()
    X = a.objects
    dims = {(x, y): a.dim(y, x) for x in X for y in X}
    alg = {}
    for x in X:
        for y in X:
            d = dims[(x, y)]
            cm = a.comult[(y, x)]
            # opposite convolution: (f_a f_b)(e_i) = <f_a, e_i(2)><f_b, e_i(1)>
            alg[(x, y)] = [[[cm[i][b][a_] for i in range(d)]
                            for b in range(d)] for a_ in range(d)]
    unit = {(x, y): list(a.counit[(y, x)]) for x in X for y in X}
    cocomp = {}
    for x in X:
        for y in X:
            for z in X:
                mt = a.mult[(z, y, x)]   # c[i][j][k] over A(z,y)⊗A(y,x)→A(z,x)
                dk, da, db = dims[(x, z)], dims[(x, y)], dims[(y, z)]
                cocomp[(x, y, z)] = [[[mt[b][a_][k] for b in range(db)]
                                      for a_ in range(da)] for k in range(dk)]
    counit = {x: list(a.unit[x]) for x in X}
    antipode = None
    if a.antipode is not None:
        antipode = {}
        for x in X:
            for y in X:
                s = a.antipode[(y, x)]   # A(y,x) → A(x,y)
                dr, dc = dims[(x, y)], dims[(y, x)]
                antipode[(x, y)] = [[s[j][i] for j in range(dc)]
                                    for i in range(dr)]
    return DualHopfCatData(a.field, X, dims, alg, unit, cocomp, counit,
                           antipode)


def undualize(c: DualHopfCatData) -> HopfCatData:
    """Inverse of ``dualize`` on the double-dual basis identification."""
    c.validate_shape()
    X = c.objects
    dims = {(x, y): c.dim(y, x) for x in X for y in X}
    mult = {}
    for x in X:
        for y in X:
            for z in X:
                t = c.cocomp[(z, y, x)]
                d1, d2, d3 = dims[(x, y)], dims[(y, z)], dims[(x, z)]
                mult[(x, y, z)] = [[[t[k][b][a_] for k in range(d3)]
                                    for b in range(d2)] for a_ in range(d1)]
    unit = {x: list(c.counit[x]) for x in X}
    comult = {}
    for x in X:
        for y in X:
            d = dims[(x, y)]
            mc = c.alg[(y, x)]
            comult[(x, y)] = [[[mc[i][j][a_] for i in range(d)]
                               for j in range(d)] for a_ in range(d)]
    counit = {(x, y): list(c.unit[(y, x)]) for x in X for y in X}
    antipode = None
    if c.antipode is not None:
        antipode = {}
        for x in X:
            for y in X:
                s = c.antipode[(y, x)]   # C(x,y) → C(y,x)
                dr, dc_ = dims[(y, x)], dims[(x, y)]
                antipode[(x, y)] = [[s[i][j] for i in range(dc_)]
                                    for j in range(dr)]
    return HopfCatData(c.field, X, dims, mult, unit, comult, counit, antipode)

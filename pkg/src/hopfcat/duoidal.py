"""Two tensor products on object families over X×X, their interchange, and
bimonoids.

The componentwise ("black") product tensors matching components; the
convolution-style ("white") product sums over a middle object:

    (M ⊙ N)(x,z) = ⊕_y M(x,y)⊗N(y,z),      blocks ordered by y;
    (M • N)(x,y) = M(x,y)⊗N(x,y).

Their units are I (one-dimensional diagonal, zero elsewhere) and J
(one-dimensional everywhere).  The interchange

    zeta: (M•N)⊙(P•Q) → (M⊙P)•(N⊙Q)

swaps the two middle tensor legs inside each diagonal block and includes it
into the double direct sum (u,v ordered with u slowest).

A bimonoid carries a monoid structure for ⊙ and a comonoid structure for •,
linked by four compatibility identities; those data are in exact bijection
with semi-Hopf category structures on the same components, realized here by
``bimonoid_from_category`` / ``category_from_bimonoid``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HopfCatData, MalformedDataError
from .linalg import LinMap
from .report import Report, check_map_equal
from .scalars import Field


@dataclass
class MkXObject:
    objects: tuple[str, ...]
    dims: dict[tuple[str, str], int]

    def dim(self, x: str, y: str) -> int:
        return self.dims[(x, y)]

    def validate_shape(self):
        for x in self.objects:
            for y in self.objects:
                if self.dims.get((x, y), -1) < 0:
                    raise MalformedDataError(f"missing dim({x},{y})")


def carrier_of(a: HopfCatData) -> MkXObject:
    return MkXObject(a.objects, dict(a.dims))


def unit_white(objects: tuple[str, ...]) -> MkXObject:
    return MkXObject(objects, {(x, y): 1 if x == y else 0
                               for x in objects for y in objects})


def unit_black(objects: tuple[str, ...]) -> MkXObject:
    return MkXObject(objects, {(x, y): 1 for x in objects for y in objects})


def white_tensor(m: MkXObject, n: MkXObject) -> tuple[MkXObject, dict]:
    """⊙ together with the block offset table offsets[(x,z)][y]."""
    if m.objects != n.objects:
        raise MalformedDataError("white tensor needs a shared object set")
    X = m.objects
    dims = {}
    offsets: dict = {}
    for x in X:
        for z in X:
            off = 0
            offsets[(x, z)] = {}
            for y in X:
                offsets[(x, z)][y] = off
                off += m.dim(x, y) * n.dim(y, z)
            dims[(x, z)] = off
    return MkXObject(X, dims), offsets


def black_tensor(m: MkXObject, n: MkXObject) -> MkXObject:
    if m.objects != n.objects:
        raise MalformedDataError("black tensor needs a shared object set")
    X = m.objects
    return MkXObject(X, {(x, y): m.dim(x, y) * n.dim(x, y)
                         for x in X for y in X})


def white_inclusion(field: Field, m: MkXObject, n: MkXObject,
                    x: str, y: str, z: str) -> LinMap:
    """M(x,y)⊗N(y,z) → (M⊙N)(x,z), the y-block inclusion."""
    prod, offsets = white_tensor(m, n)
    total = prod.dim(x, z)
    block = m.dim(x, y) * n.dim(y, z)
    off = offsets[(x, z)][y]
    zero, one = field.zero, field.one
    out = [[zero] * block for _ in range(total)]
    for i in range(block):
        out[off + i][i] = one
    return LinMap(field, total, block, out)


def zeta(field: Field, m: MkXObject, n: MkXObject, p: MkXObject,
         q: MkXObject) -> dict[tuple[str, str], LinMap]:
    """The interchange (M•N)⊙(P•Q) → (M⊙P)•(N⊙Q), one block map per pair."""
    for other in (n, p, q):
        if other.objects != m.objects:
            raise MalformedDataError("interchange needs a shared object set")
    X = m.objects
    mn = black_tensor(m, n)
    pq = black_tensor(p, q)
    dom, dom_off = white_tensor(mn, pq)
    mp, mp_off = white_tensor(m, p)
    nq, nq_off = white_tensor(n, q)
    out = {}
    for x in X:
        for y in X:
            rows = mp.dim(x, y) * nq.dim(x, y)
            cols = dom.dim(x, y)
            zero, one = field.zero, field.one
            mat = [[zero] * cols for _ in range(rows)]
            for z in X:
                dm, dn = m.dim(x, z), n.dim(x, z)
                dp, dq = p.dim(z, y), q.dim(z, y)
                block_off = dom_off[(x, y)][z]
                for im in range(dm):
                    for jn in range(dn):
                        for kp in range(dp):
                            for lq in range(dq):
                                col = block_off + ((im * dn + jn) * dp + kp) \
                                    * dq + lq
                                r1 = mp_off[(x, y)][z] + im * dp + kp
                                r2 = nq_off[(x, y)][z] + jn * dq + lq
                                row = r1 * nq.dim(x, y) + r2
                                mat[row][col] = one
            out[(x, y)] = LinMap(field, rows, cols, mat)
    return out


@dataclass
class BimonoidData:
    field: Field
    carrier: MkXObject
    mu: dict[tuple[str, str, str], list]   # component (x,u,y): A(x,u)⊗A(u,y)→A(x,y)
    eta: dict[str, list]                    # vector in A(x,x)
    delta: dict[tuple[str, str], list]      # D[i][j][k]
    eps: dict[tuple[str, str], list]

    def dim(self, x: str, y: str) -> int:
        return self.carrier.dim(x, y)

    def validate_shape(self):
        self.carrier.validate_shape()
        X = self.carrier.objects
        for x in X:
            for u in X:
                for y in X:
                    t = self.mu.get((x, u, y))
                    d1, d2, d3 = self.dim(x, u), self.dim(u, y), self.dim(x, y)
                    if t is None or len(t) != d1 or any(
                            len(pp) != d2 or any(len(qq) != d3 for qq in pp)
                            for pp in t):
                        raise MalformedDataError(
                            f"product component at ({x},{u},{y}) malformed")
        for x in X:
            if len(self.eta.get(x, ())) != self.dim(x, x):
                raise MalformedDataError(f"unit component at {x} malformed")
        for x in X:
            for y in X:
                d = self.dim(x, y)
                t = self.delta.get((x, y))
                if t is None or len(t) != d or any(
                        len(pp) != d or any(len(qq) != d for qq in pp)
                        for pp in t):
                    raise MalformedDataError(
                        f"comultiplication at ({x},{y}) malformed")
                if len(self.eps.get((x, y), ())) != d:
                    raise MalformedDataError(f"counit at ({x},{y}) malformed")

    def mu_component(self, x: str, u: str, y: str) -> LinMap:
        d1, d2, d3 = self.dim(x, u), self.dim(u, y), self.dim(x, y)
        t = self.mu[(x, u, y)]
        zero = self.field.zero
        out = [[zero] * (d1 * d2) for _ in range(d3)]
        for i in range(d1):
            for j in range(d2):
                for k in range(d3):
                    out[k][i * d2 + j] = t[i][j][k]
        return LinMap(self.field, d3, d1 * d2, out)

    def mu_map(self, x: str, y: str) -> LinMap:
        """(A⊙A)(x,y) → A(x,y): all middle-object components side by side."""
        _, offsets = white_tensor(self.carrier, self.carrier)
        X = self.carrier.objects
        cols = sum(self.dim(x, u) * self.dim(u, y) for u in X)
        zero = self.field.zero
        out = [[zero] * cols for _ in range(self.dim(x, y))]
        for u in X:
            comp = self.mu_component(x, u, y)
            off = offsets[(x, y)][u]
            for r in range(comp.rows):
                for c in range(comp.cols):
                    out[r][off + c] = comp.entries[r][c]
        return LinMap(self.field, self.dim(x, y), cols, out)

    def eta_map(self, x: str) -> LinMap:
        return LinMap.column(self.field, self.eta[x])

    def delta_map(self, x: str, y: str) -> LinMap:
        d = self.dim(x, y)
        t = self.delta[(x, y)]
        zero = self.field.zero
        out = [[zero] * d for _ in range(d * d)]
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    out[j * d + k][i] = t[i][j][k]
        return LinMap(self.field, d * d, d, out)

    def eps_map(self, x: str, y: str) -> LinMap:
        return LinMap.row(self.field, self.eps[(x, y)])


def verify_bimonoid(b: BimonoidData) -> Report:
    """Monoid laws for ⊙, comonoid laws for •, and the four compatibility
    identities, with the interchange realized as an explicit block matrix."""
    b.validate_shape()
    rep = Report()
    f = b.field
    car = b.carrier
    X = car.objects

    for x in X:
        for u in X:
            for v in X:
                for y in X:
                    lhs = b.mu_component(x, v, y) @ b.mu_component(x, u, v) \
                        .kron(LinMap.identity(f, car.dim(v, y)))
                    rhs = b.mu_component(x, u, y) @ LinMap.identity(
                        f, car.dim(x, u)).kron(b.mu_component(u, v, y))
                    check_map_equal(rep, "monoid-assoc", (x, u, v, y),
                                    lhs, rhs)
    for x in X:
        for y in X:
            ident = LinMap.identity(f, car.dim(x, y))
            check_map_equal(rep, "monoid-unit-left", (x, y),
                            b.mu_component(x, x, y)
                            @ b.eta_map(x).kron(ident), ident)
            check_map_equal(rep, "monoid-unit-right", (x, y),
                            b.mu_component(x, y, y)
                            @ ident.kron(b.eta_map(y)), ident)

    for x in X:
        for y in X:
            d = car.dim(x, y)
            ident = LinMap.identity(f, d)
            dm = b.delta_map(x, y)
            em = b.eps_map(x, y)
            check_map_equal(rep, "comonoid-coassoc", (x, y),
                            dm.kron(ident) @ dm, ident.kron(dm) @ dm)
            check_map_equal(rep, "comonoid-counit-left", (x, y),
                            em.kron(ident) @ dm, ident)
            check_map_equal(rep, "comonoid-counit-right", (x, y),
                            ident.kron(em) @ dm, ident)

    zeta_blocks = zeta(f, car, car, car, car)
    for x in X:
        for y in X:
            mu_xy = b.mu_map(x, y)
            lhs = b.delta_map(x, y) @ mu_xy
            # blockwise delta⊙delta into (A•A)⊙(A•A)
            aa = black_tensor(car, car)
            dd_dom, dd_dom_off = white_tensor(car, car)
            dd_cod, dd_cod_off = white_tensor(aa, aa)
            zero = f.zero
            dd = [[zero] * dd_dom.dim(x, y) for _ in range(dd_cod.dim(x, y))]
            for z in X:
                blk = b.delta_map(x, z).kron(b.delta_map(z, y))
                ro, co = dd_cod_off[(x, y)][z], dd_dom_off[(x, y)][z]
                for r in range(blk.rows):
                    for c in range(blk.cols):
                        if blk.entries[r][c]:
                            dd[ro + r][co + c] = blk.entries[r][c]
            dd_map = LinMap(f, dd_cod.dim(x, y), dd_dom.dim(x, y), dd)
            rhs = mu_xy.kron(mu_xy) @ zeta_blocks[(x, y)] @ dd_map
            check_map_equal(rep, "interchange-mult-comult", (x, y), lhs, rhs)

            # counit against the product: summing the componentwise counits
            ee_cols = dd_dom.dim(x, y)
            ee = [[zero] * ee_cols]
            for z in X:
                blk = b.eps_map(x, z).kron(b.eps_map(z, y))
                co = dd_dom_off[(x, y)][z]
                for c in range(blk.cols):
                    ee[0][co + c] = blk.entries[0][c]
            check_map_equal(rep, "interchange-counit-mult", (x, y),
                            b.eps_map(x, y) @ mu_xy,
                            LinMap(f, 1, ee_cols, ee))
    for x in X:
        check_map_equal(rep, "interchange-comult-unit", (x,),
                        b.delta_map(x, x) @ b.eta_map(x),
                        b.eta_map(x).kron(b.eta_map(x)))
        check_map_equal(rep, "interchange-counit-unit", (x,),
                        b.eps_map(x, x) @ b.eta_map(x),
                        LinMap.identity(f, 1))
    return rep


def bimonoid_from_category(a: HopfCatData) -> BimonoidData:
    """Reshape composition/unit/comultiplication/counit as bimonoid data."""
    a.validate_shape()
    return BimonoidData(
        a.field, carrier_of(a),
        {k: v for k, v in a.mult.items()},
        {x: list(v) for x, v in a.unit.items()},
        {k: v for k, v in a.comult.items()},
        {k: list(v) for k, v in a.counit.items()})


def category_from_bimonoid(b: BimonoidData) -> HopfCatData:
    """Inverse reshaping; exact on structure constants in both directions."""
    b.validate_shape()
    return HopfCatData(
        b.field, b.carrier.objects, dict(b.carrier.dims),
        {k: v for k, v in b.mu.items()},
        {x: list(v) for x, v in b.eta.items()},
        {k: v for k, v in b.delta.items()},
        {k: list(v) for k, v in b.eps.items()},
        None)

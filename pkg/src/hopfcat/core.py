"""The central structure-constant record for finite k-linear Hopf categories.

A ``HopfCatData`` holds, over a fixed exact field and a finite ordered object
set X:

- hom dimensions d(x,y) (zero allowed; empty homs check vacuously),
- composition tensors  mult[x,y,z][i][j][k]:
      e(x,y)_i · e(y,z)_j  =  sum_k  c[i][j][k] e(x,z)_k,
- unit vectors unit[x] in A(x,x),
- comultiplication tensors comult[x,y][i][j][k]:
      delta(e(x,y)_i)  =  sum_{j,k}  D[i][j][k] e(x,y)_j ⊗ e(x,y)_k,
- counit covectors counit[x,y],
- optionally antipode matrices antipode[x,y][j][i]:
      S(e(x,y)_i)  =  sum_j  S[j][i] e(y,x)_j,   S(x,y): A(x,y) → A(y,x).

Hom(x,y) is A(y,x): composition consumes A(x,y)⊗A(y,z) and the groupoid
importer honors this.  The braiding is always the flip of tensor factors.

The verifier checks axioms as exact identities of matrices, which by linearity
is a complete proof over the basis.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .linalg import LinMap, invert, NotInvertible, rank, swap_map
from .report import (Report, PreconditionError, check_condition,
                     check_map_equal)
from .scalars import Field


class MalformedDataError(ValueError):
    """Structure tensors inconsistent with the declared dimensions."""


class MissingAntipodeError(ValueError):
    """An antipode was required but the data does not carry one."""


LEVELS = ("category", "semihopf", "hopf")


def _tensor3_shape_ok(t, d1: int, d2: int, d3: int) -> bool:
    if len(t) != d1:
        return False
    for p in t:
        if len(p) != d2 or any(len(q) != d3 for q in p):
            return False
    return True


@dataclass
class HopfCatData:
    field: Field
    objects: tuple[str, ...]
    dims: dict[tuple[str, str], int]
    mult: dict[tuple[str, str, str], list]
    unit: dict[str, list]
    comult: dict[tuple[str, str], list]
    counit: dict[tuple[str, str], list]
    antipode: dict[tuple[str, str], list] | None = None

    # -- shape ---------------------------------------------------------------

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
                if (x, y) not in self.dims or self.dims[(x, y)] < 0:
                    raise MalformedDataError(f"missing or negative dim({x},{y})")
        for x in X:
            for y in X:
                for z in X:
                    t = self.mult.get((x, y, z))
                    if t is None or not _tensor3_shape_ok(
                            t, self.dim(x, y), self.dim(y, z), self.dim(x, z)):
                        raise MalformedDataError(
                            f"composition tensor at ({x},{y},{z}) malformed")
        for x in X:
            if len(self.unit.get(x, ())) != self.dim(x, x):
                raise MalformedDataError(f"unit vector at {x} malformed")
        for x in X:
            for y in X:
                d = self.dim(x, y)
                t = self.comult.get((x, y))
                if t is None or not _tensor3_shape_ok(t, d, d, d):
                    raise MalformedDataError(
                        f"comultiplication tensor at ({x},{y}) malformed")
                if len(self.counit.get((x, y), ())) != d:
                    raise MalformedDataError(f"counit at ({x},{y}) malformed")
        if self.antipode is not None:
            for x in X:
                for y in X:
                    m = self.antipode.get((x, y))
                    dxy, dyx = self.dim(x, y), self.dim(y, x)
                    if m is None or len(m) != dyx or any(len(r) != dxy for r in m):
                        raise MalformedDataError(
                            f"antipode matrix at ({x},{y}) malformed")

    # -- structure maps as matrices -------------------------------------------

    def identity_map(self, x: str, y: str) -> LinMap:
        return LinMap.identity(self.field, self.dim(x, y))

    def mult_map(self, x: str, y: str, z: str) -> LinMap:
        """A(x,y)⊗A(y,z) → A(x,z), domain flattened leftmost-slowest."""
        d1, d2, d3 = self.dim(x, y), self.dim(y, z), self.dim(x, z)
        t = self.mult[(x, y, z)]
        zero = self.field.zero
        out = [[zero] * (d1 * d2) for _ in range(d3)]
        for i in range(d1):
            for j in range(d2):
                col = i * d2 + j
                for k in range(d3):
                    out[k][col] = t[i][j][k]
        return LinMap(self.field, d3, d1 * d2, out)

    def unit_map(self, x: str) -> LinMap:
        return LinMap.column(self.field, self.unit[x])

    def comult_map(self, x: str, y: str) -> LinMap:
        """A(x,y) → A(x,y)⊗A(x,y)."""
        d = self.dim(x, y)
        t = self.comult[(x, y)]
        zero = self.field.zero
        out = [[zero] * d for _ in range(d * d)]
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    out[j * d + k][i] = t[i][j][k]
        return LinMap(self.field, d * d, d, out)

    def counit_map(self, x: str, y: str) -> LinMap:
        return LinMap.row(self.field, self.counit[(x, y)])

    def antipode_map(self, x: str, y: str) -> LinMap:
        if self.antipode is None:
            raise MissingAntipodeError("data carries no antipode")
        return LinMap(self.field, self.dim(y, x), self.dim(x, y),
                      self.antipode[(x, y)])

    def swap(self, d1: int, d2: int) -> LinMap:
        return swap_map(self.field, d1, d2)

    # -- convenience ----------------------------------------------------------

    def strip_antipode(self) -> "HopfCatData":
        return replace(self, antipode=None)

    def with_antipode(self, antipode: dict) -> "HopfCatData":
        return replace(self, antipode=antipode)


def verify_structure(a: HopfCatData, level: str = "hopf") -> Report:
    """Check every axiom instance of the requested level as an exact identity.

    level 'category': associativity and unit laws of composition.
    level 'semihopf': additionally each hom is a coalgebra and composition and
    units are coalgebra maps.
    level 'hopf': additionally both antipode identities.
    """
    if level not in LEVELS:
        raise ValueError(f"unknown level '{level}'")
    a.validate_shape()
    if level == "hopf" and a.antipode is None:
        raise MissingAntipodeError("level 'hopf' requires an antipode")
    rep = Report()
    X = a.objects

    for x in X:
        for y in X:
            for z in X:
                for t in X:
                    lhs = a.mult_map(x, z, t) @ a.mult_map(x, y, z).kron(
                        a.identity_map(z, t))
                    rhs = a.mult_map(x, y, t) @ a.identity_map(x, y).kron(
                        a.mult_map(y, z, t))
                    check_map_equal(rep, "assoc", (x, y, z, t), lhs, rhs)
    for x in X:
        for y in X:
            ident = a.identity_map(x, y)
            check_map_equal(rep, "unit-left", (x, y),
                            a.mult_map(x, x, y) @ a.unit_map(x).kron(ident),
                            ident)
            check_map_equal(rep, "unit-right", (x, y),
                            a.mult_map(x, y, y) @ ident.kron(a.unit_map(y)),
                            ident)
    if level == "category":
        return rep

    for x in X:
        for y in X:
            d = a.dim(x, y)
            ident = a.identity_map(x, y)
            cm = a.comult_map(x, y)
            cu = a.counit_map(x, y)
            check_map_equal(rep, "coassoc", (x, y),
                            cm.kron(ident) @ cm, ident.kron(cm) @ cm)
            check_map_equal(rep, "counit-left", (x, y),
                            cu.kron(ident) @ cm, ident)
            check_map_equal(rep, "counit-right", (x, y),
                            ident.kron(cu) @ cm, ident)
    for x in X:
        for y in X:
            for z in X:
                m = a.mult_map(x, y, z)
                d1, d2 = a.dim(x, y), a.dim(y, z)
                # comultiplication is multiplicative (with the middle flip)
                lhs = a.comult_map(x, z) @ m
                mid = a.identity_map(x, y).kron(
                    a.swap(d1, d2)).kron(a.identity_map(y, z))
                rhs = m.kron(m) @ mid @ a.comult_map(x, y).kron(
                    a.comult_map(y, z))
                check_map_equal(rep, "comult-mult", (x, y, z), lhs, rhs)
                check_map_equal(rep, "counit-mult", (x, y, z),
                                a.counit_map(x, z) @ m,
                                a.counit_map(x, y).kron(a.counit_map(y, z)))
    for x in X:
        check_map_equal(rep, "comult-unit", (x,),
                        a.comult_map(x, x) @ a.unit_map(x),
                        a.unit_map(x).kron(a.unit_map(x)))
        check_map_equal(rep, "counit-unit", (x,),
                        a.counit_map(x, x) @ a.unit_map(x),
                        LinMap.identity(a.field, 1))
    if level == "semihopf":
        return rep

    for x in X:
        for y in X:
            ident = a.identity_map(x, y)
            s = a.antipode_map(x, y)
            cm = a.comult_map(x, y)
            target_x = a.unit_map(x) @ a.counit_map(x, y)
            target_y = a.unit_map(y) @ a.counit_map(x, y)
            check_map_equal(rep, "antipode-left", (x, y),
                            a.mult_map(x, y, x) @ ident.kron(s) @ cm, target_x)
            check_map_equal(rep, "antipode-right", (x, y),
                            a.mult_map(y, x, y) @ s.kron(ident) @ cm, target_y)
    return rep


def check_antipode_theorems(a: HopfCatData) -> Report:
    """Derived antipode identities: anti-(co)multiplicativity, unit and counit
    preservation, and the three equivalent twisted-antipode conditions,
    reported per object pair together with their pairwise agreement."""
    base = verify_structure(a, "hopf")
    if not base.overall:
        raise PreconditionError(
            "antipode theorems need data that passes level 'hopf': "
            + base.summary())
    rep = Report()
    X = a.objects

    for x in X:
        for y in X:
            for z in X:
                m = a.mult_map(x, y, z)
                lhs = a.antipode_map(x, z) @ m
                rhs = (a.mult_map(z, y, x)
                       @ a.antipode_map(y, z).kron(a.antipode_map(x, y))
                       @ a.swap(a.dim(x, y), a.dim(y, z)))
                check_map_equal(rep, "antipode-antimult", (x, y, z), lhs, rhs)
    for x in X:
        check_map_equal(rep, "antipode-unit", (x,),
                        a.antipode_map(x, x) @ a.unit_map(x), a.unit_map(x))
    for x in X:
        for y in X:
            s = a.antipode_map(x, y)
            d = a.dim(x, y)
            lhs = a.comult_map(y, x) @ s
            rhs = s.kron(s) @ a.swap(d, d) @ a.comult_map(x, y)
            check_map_equal(rep, "antipode-anticomult", (x, y), lhs, rhs)
            check_map_equal(rep, "antipode-counit", (x, y),
                            a.counit_map(y, x) @ s, a.counit_map(x, y))

    # The three equivalent conditions.  Whether they hold is a property of
    # the instance, not an axiom, so they are recorded as measurements; only
    # their pairwise agreement is a hard check.
    for x in X:
        for y in X:
            s = a.antipode_map(x, y)
            d = a.dim(x, y)
            ident = a.identity_map(x, y)
            flip_cm = a.swap(d, d) @ a.comult_map(x, y)
            c1 = check_map_equal(
                rep, "antipode-left-twisted", (x, y),
                a.mult_map(y, x, y) @ s.kron(ident) @ flip_cm,
                a.unit_map(y) @ a.counit_map(x, y), required=False)
            c2 = check_map_equal(
                rep, "antipode-right-twisted", (x, y),
                a.mult_map(x, y, x) @ ident.kron(s) @ flip_cm,
                a.unit_map(x) @ a.counit_map(x, y), required=False)
            c3 = check_map_equal(
                rep, "antipode-involutive", (x, y),
                a.antipode_map(y, x) @ s, ident, required=False)
            check_condition(
                rep, "antipode-conditions-agree", (x, y),
                c1 == c2 == c3,
                residual=f"left-twisted={c1} right-twisted={c2} involutive={c3}")
    return rep


def transform(a: HopfCatData, mode: str) -> HopfCatData:
    """Opposite / coopposite / both, as exact rewrites of structure constants.

    The braiding is the basis flip.  When an antipode is present it is carried
    along: the combined opposite-coopposite keeps the same antipode matrices
    (relocated), while a single opposite or coopposite carries the inverse
    antipode, which always exists for valid Hopf data.
    """
    if mode not in ("opposite", "coopposite", "opcop"):
        raise ValueError(f"unknown transform mode '{mode}'")
    a.validate_shape()
    X = a.objects
    flip_obj = mode in ("opposite", "opcop")
    flip_comult = mode in ("coopposite", "opcop")

    if flip_obj:
        dims = {(x, y): a.dim(y, x) for x in X for y in X}
        mult = {}
        for x in X:
            for y in X:
                for z in X:
                    t = a.mult[(z, y, x)]
                    d1, d2, d3 = a.dim(y, x), a.dim(z, y), a.dim(z, x)
                    mult[(x, y, z)] = [[[t[j][i][k] for k in range(d3)]
                                        for j in range(d2)]
                                       for i in range(d1)]
        comult = {(x, y): a.comult[(y, x)] for x in X for y in X}
        counit = {(x, y): a.counit[(y, x)] for x in X for y in X}
    else:
        dims = dict(a.dims)
        mult = {k: v for k, v in a.mult.items()}
        comult = {k: v for k, v in a.comult.items()}
        counit = {k: v for k, v in a.counit.items()}
    if flip_comult:
        comult = {
            key: [[[comult[key][i][k][j] for k in range(len(comult[key][i]))]
                   for j in range(len(comult[key][i]))]
                  for i in range(len(comult[key]))]
            for key in comult
        }

    antipode = None
    if a.antipode is not None:
        antipode = {}
        for x in X:
            for y in X:
                if mode == "opcop":
                    antipode[(x, y)] = a.antipode[(y, x)]
                elif mode == "opposite":
                    inv = invert(a.antipode_map(x, y))
                    if isinstance(inv, NotInvertible):
                        raise MalformedDataError(
                            f"antipode at ({x},{y}) is singular; "
                            "the opposite antipode needs its inverse")
                    antipode[(x, y)] = [list(r) for r in inv.entries]
                else:  # coopposite
                    inv = invert(a.antipode_map(y, x))
                    if isinstance(inv, NotInvertible):
                        raise MalformedDataError(
                            f"antipode at ({y},{x}) is singular; "
                            "the coopposite antipode needs its inverse")
                    antipode[(x, y)] = [list(r) for r in inv.entries]

    return HopfCatData(a.field, X, dims, mult, dict(a.unit), comult, counit,
                       antipode)


def check_strictness(a: HopfCatData) -> Report:
    """Surjectivity of every composition map, reported per triple, plus the
    loop-only variant and their (theorem-backed) agreement on this instance."""
    base = verify_structure(a, "category")
    if not base.overall:
        raise PreconditionError(
            "strictness needs data valid at level 'category': "
            + base.summary())
    rep = Report()
    X = a.objects
    all_surj = True
    loops_surj = True
    for x in X:
        for y in X:
            for z in X:
                m = a.mult_map(x, y, z)
                r = rank(m)
                ok = r == a.dim(x, z)
                all_surj &= ok
                check_condition(rep, "compose-surjective", (x, y, z), ok,
                                residual=f"rank {r} < {a.dim(x, z)}")
                if x == z:
                    loops_surj &= ok
                    check_condition(rep, "compose-surjective-loop", (x, y), ok,
                                    residual=f"rank {r} < {a.dim(x, z)}")
    check_condition(rep, "strictness-conditions-agree", (),
                    all_surj == loops_surj,
                    residual=f"all={all_surj} loops={loops_surj}")
    return rep


def is_strict(a: HopfCatData) -> bool:
    rep = check_strictness(a)
    return all(it.ok for it in rep.by_axiom("compose-surjective"))

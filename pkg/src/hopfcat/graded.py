"""Group-graded Hopf structures and their lift to Hopf categories.

A graded record holds one component algebra-of-coalgebras per group element:
component coalgebras (comult/counit per degree), pairwise multiplication
tensors m[s,t]: A_s ⊗ A_t → A_{st}, a unit vector in the degree-e component,
and antipode matrices S_s: A_s → A_{s^{-1}}.

The lift K places A_{s^{-1} t} at the hom slot (s, t) and reuses the graded
tensors verbatim, so round-trip comparisons stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HopfCatData
from .linalg import LinMap, swap_map
from .report import Report, check_map_equal
from .scalars import Field


class GradedError(ValueError):
    """Graded axiom violation; carries the offending degree pair."""

    def __init__(self, message: str, degrees: tuple[str, ...] = ()):
        super().__init__(message)
        self.degrees = degrees


@dataclass
class GroupTable:
    elements: tuple[str, ...]
    table: dict[tuple[str, str], str]

    def validate(self):
        E = self.elements
        if len(set(E)) != len(E):
            raise GradedError("duplicate group elements")
        for a in E:
            for b in E:
                if self.table.get((a, b)) not in E:
                    raise GradedError(f"missing or bad product ({a},{b})",
                                      (a, b))
        for a in E:
            for b in E:
                for c in E:
                    if self.table[(self.table[(a, b)], c)] != \
                            self.table[(a, self.table[(b, c)])]:
                        raise GradedError(
                            f"group table not associative at ({a},{b},{c})",
                            (a, b))
        self.identity()
        for a in E:
            self.inverse(a)

    def identity(self) -> str:
        for e in self.elements:
            if all(self.table[(e, a)] == a and self.table[(a, e)] == a
                   for a in self.elements):
                return e
        raise GradedError("group table has no identity element")

    def inverse(self, a: str) -> str:
        e = self.identity()
        for b in self.elements:
            if self.table[(a, b)] == e and self.table[(b, a)] == e:
                return b
        raise GradedError(f"group element '{a}' has no inverse", (a,))

    def mul(self, a: str, b: str) -> str:
        return self.table[(a, b)]


@dataclass
class GradedHopfData:
    field: Field
    group: GroupTable
    dims: dict[str, int]
    mult: dict[tuple[str, str], list]   # m[s,t][i][j][k]
    unit: list                          # vector in the degree-e component
    comult: dict[str, list]             # per degree: D[i][j][k]
    counit: dict[str, list]
    antipode: dict[str, list] | None = None   # S_s matrix: rows over A_{s^-1}

    def dim(self, s: str) -> int:
        return self.dims[s]

    def mult_map(self, s: str, t: str) -> LinMap:
        d1, d2 = self.dim(s), self.dim(t)
        d3 = self.dim(self.group.mul(s, t))
        zero = self.field.zero
        out = [[zero] * (d1 * d2) for _ in range(d3)]
        tns = self.mult[(s, t)]
        for i in range(d1):
            for j in range(d2):
                for k in range(d3):
                    out[k][i * d2 + j] = tns[i][j][k]
        return LinMap(self.field, d3, d1 * d2, out)

    def unit_map(self) -> LinMap:
        return LinMap.column(self.field, self.unit)

    def comult_map(self, s: str) -> LinMap:
        d = self.dim(s)
        zero = self.field.zero
        out = [[zero] * d for _ in range(d * d)]
        t = self.comult[s]
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    out[j * d + k][i] = t[i][j][k]
        return LinMap(self.field, d * d, d, out)

    def counit_map(self, s: str) -> LinMap:
        return LinMap.row(self.field, self.counit[s])

    def antipode_map(self, s: str) -> LinMap:
        si = self.group.inverse(s)
        return LinMap(self.field, self.dim(si), self.dim(s), self.antipode[s])


def validate_graded(h: GradedHopfData) -> Report:
    """All graded axioms as exact identities (group table included)."""
    h.group.validate()
    rep = Report()
    G = h.group.elements
    e = h.group.identity()
    ident = {s: LinMap.identity(h.field, h.dim(s)) for s in G}

    for s in G:
        for t in G:
            for r in G:
                lhs = h.mult_map(h.group.mul(s, t), r) @ \
                    h.mult_map(s, t).kron(ident[r])
                rhs = h.mult_map(s, h.group.mul(t, r)) @ \
                    ident[s].kron(h.mult_map(t, r))
                check_map_equal(rep, "graded-assoc", (s, t, r), lhs, rhs)
    for s in G:
        check_map_equal(rep, "graded-unit-left", (s,),
                        h.mult_map(e, s) @ h.unit_map().kron(ident[s]),
                        ident[s])
        check_map_equal(rep, "graded-unit-right", (s,),
                        h.mult_map(s, e) @ ident[s].kron(h.unit_map()),
                        ident[s])
    for s in G:
        cm, cu = h.comult_map(s), h.counit_map(s)
        check_map_equal(rep, "graded-coassoc", (s,),
                        cm.kron(ident[s]) @ cm, ident[s].kron(cm) @ cm)
        check_map_equal(rep, "graded-counit-left", (s,),
                        cu.kron(ident[s]) @ cm, ident[s])
        check_map_equal(rep, "graded-counit-right", (s,),
                        ident[s].kron(cu) @ cm, ident[s])
    for s in G:
        for t in G:
            st = h.group.mul(s, t)
            m = h.mult_map(s, t)
            mid = ident[s].kron(swap_map(h.field, h.dim(s), h.dim(t))).kron(
                ident[t])
            check_map_equal(rep, "graded-comult-mult", (s, t),
                            h.comult_map(st) @ m,
                            m.kron(m) @ mid
                            @ h.comult_map(s).kron(h.comult_map(t)))
            check_map_equal(rep, "graded-counit-mult", (s, t),
                            h.counit_map(st) @ m,
                            h.counit_map(s).kron(h.counit_map(t)))
    check_map_equal(rep, "graded-comult-unit", (e,),
                    h.comult_map(e) @ h.unit_map(),
                    h.unit_map().kron(h.unit_map()))
    check_map_equal(rep, "graded-counit-unit", (e,),
                    h.counit_map(e) @ h.unit_map(),
                    LinMap.identity(h.field, 1))
    if h.antipode is not None:
        for s in G:
            si = h.group.inverse(s)
            sm = h.antipode_map(s)
            target = h.unit_map() @ h.counit_map(s)
            check_map_equal(rep, "graded-antipode-left", (s,),
                            h.mult_map(s, si) @ ident[s].kron(sm)
                            @ h.comult_map(s), target)
            check_map_equal(rep, "graded-antipode-right", (s,),
                            h.mult_map(si, s) @ sm.kron(ident[s])
                            @ h.comult_map(s), target)
    return rep


def from_graded(h: GradedHopfData) -> HopfCatData:
    """Lift a graded Hopf structure to the Hopf category with the group as
    object set and A_{s^{-1} t} in the hom slot (s, t)."""
    rep = validate_graded(h)
    if not rep.overall:
        bad = rep.failed()[0]
        raise GradedError(
            f"graded axioms fail: {bad.axiom} at {bad.objects}", bad.objects)
    G = h.group.elements
    inv = {s: h.group.inverse(s) for s in G}
    mul = h.group.mul

    def slot(s, t):
        return mul(inv[s], t)

    dims = {(s, t): h.dim(slot(s, t)) for s in G for t in G}
    mult = {(s, r, t): h.mult[(slot(s, r), slot(r, t))]
            for s in G for r in G for t in G}
    unit = {s: list(h.unit) for s in G}
    comult = {(s, t): h.comult[slot(s, t)] for s in G for t in G}
    counit = {(s, t): h.counit[slot(s, t)] for s in G for t in G}
    antipode = None
    if h.antipode is not None:
        # S_g lands in degree g^{-1}, which is exactly the (t, s) slot.
        antipode = {(s, t): h.antipode[slot(s, t)] for s in G for t in G}
    return HopfCatData(h.field, G, dims, mult, unit, comult, counit, antipode)

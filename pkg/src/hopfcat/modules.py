"""Modules over a Hopf category, comodules over a dual one, and the exact
correspondence between them in the finite-dimensional setting.

Action tensors, with M the module family:

    right:  action[x,y,z][i][j][k]:  e_i · a_j = sum_k p[i][j][k] e_k,
            psi(x,y,z): M(x,y)⊗A(y,z) → M(x,z)
    left:   action[x,y,z][i][j][k]:  a_i · e_j = sum_k p[i][j][k] e_k,
            psi(x,y,z): A(x,y)⊗M(y,z) → M(x,z)

Coaction tensors over a dual category C:

    coaction[x,y,z][i][j][k]:  rho(e(x,z)_i) = sum p[i][j][k] e(x,y)_j ⊗ f(y,z)_k,
            rho(x,y,z): M(x,z) → M(x,y)⊗C(y,z)

The module↔comodule translation pairs against the coordinate dual bases, so
both round trips are literal identities of tensors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HopfCatData, MalformedDataError
from .dual import DualHopfCatData, dualize, undualize
from .linalg import LinMap, swap_map
from .report import Report, check_map_equal


class BaseMismatchError(ValueError):
    """Module data does not fit its base structure."""


@dataclass
class ModuleData:
    base: HopfCatData
    side: str                       # "right" | "left"
    dims: dict[tuple[str, str], int]
    action: dict[tuple[str, str, str], list]

    def dim(self, x: str, y: str) -> int:
        return self.dims[(x, y)]

    def identity_map(self, x: str, y: str) -> LinMap:
        return LinMap.identity(self.base.field, self.dim(x, y))

    def action_map(self, x: str, y: str, z: str) -> LinMap:
        f = self.base.field
        if self.side == "right":
            d1, d2, d3 = self.dim(x, y), self.base.dim(y, z), self.dim(x, z)
        else:
            d1, d2, d3 = self.base.dim(x, y), self.dim(y, z), self.dim(x, z)
        t = self.action[(x, y, z)]
        zero = f.zero
        out = [[zero] * (d1 * d2) for _ in range(d3)]
        for i in range(d1):
            for j in range(d2):
                for k in range(d3):
                    out[k][i * d2 + j] = t[i][j][k]
        return LinMap(f, d3, d1 * d2, out)

    def validate_shape(self):
        if self.side not in ("right", "left"):
            raise MalformedDataError(f"unknown module side '{self.side}'")
        X = self.base.objects
        for x in X:
            for y in X:
                if self.dims.get((x, y), -1) < 0:
                    raise BaseMismatchError(f"missing module dim({x},{y})")
        for x in X:
            for y in X:
                for z in X:
                    t = self.action.get((x, y, z))
                    if self.side == "right":
                        d1, d2, d3 = (self.dim(x, y), self.base.dim(y, z),
                                      self.dim(x, z))
                    else:
                        d1, d2, d3 = (self.base.dim(x, y), self.dim(y, z),
                                      self.dim(x, z))
                    if t is None or len(t) != d1 or any(
                            len(p) != d2 or any(len(q) != d3 for q in p)
                            for p in t):
                        raise BaseMismatchError(
                            f"action tensor at ({x},{y},{z}) malformed")


@dataclass
class ComoduleData:
    base: DualHopfCatData
    dims: dict[tuple[str, str], int]
    coaction: dict[tuple[str, str, str], list]

    def dim(self, x: str, y: str) -> int:
        return self.dims[(x, y)]

    def coaction_map(self, x: str, y: str, z: str) -> LinMap:
        f = self.base.field
        d1 = self.dim(x, z)
        d2, d3 = self.dim(x, y), self.base.dim(y, z)
        t = self.coaction[(x, y, z)]
        zero = f.zero
        out = [[zero] * d1 for _ in range(d2 * d3)]
        for i in range(d1):
            for j in range(d2):
                for k in range(d3):
                    out[j * d3 + k][i] = t[i][j][k]
        return LinMap(f, d2 * d3, d1, out)

    def validate_shape(self):
        X = self.base.objects
        for x in X:
            for y in X:
                if self.dims.get((x, y), -1) < 0:
                    raise BaseMismatchError(f"missing comodule dim({x},{y})")
        for x in X:
            for y in X:
                for z in X:
                    t = self.coaction.get((x, y, z))
                    d1 = self.dim(x, z)
                    d2, d3 = self.dim(x, y), self.base.dim(y, z)
                    if t is None or len(t) != d1 or any(
                            len(p) != d2 or any(len(q) != d3 for q in p)
                            for p in t):
                        raise BaseMismatchError(
                            f"coaction tensor at ({x},{y},{z}) malformed")


def verify_module(m: ModuleData) -> Report:
    """Associativity and unit laws of the action, on every basis element."""
    m.validate_shape()
    rep = Report()
    a = m.base
    X = a.objects
    if m.side == "right":
        for x in X:
            for y in X:
                for z in X:
                    for u in X:
                        lhs = m.action_map(x, z, u) @ m.action_map(x, y, z) \
                            .kron(LinMap.identity(a.field, a.dim(z, u)))
                        rhs = m.action_map(x, y, u) @ m.identity_map(x, y) \
                            .kron(a.mult_map(y, z, u))
                        check_map_equal(rep, "module-assoc", (x, y, z, u),
                                        lhs, rhs)
        for x in X:
            for y in X:
                ident = m.identity_map(x, y)
                check_map_equal(rep, "module-unit", (x, y),
                                m.action_map(x, y, y)
                                @ ident.kron(a.unit_map(y)), ident)
    else:
        for x in X:
            for y in X:
                for z in X:
                    for u in X:
                        lhs = m.action_map(x, y, u) @ LinMap.identity(
                            a.field, a.dim(x, y)).kron(m.action_map(y, z, u))
                        rhs = m.action_map(x, z, u) @ a.mult_map(x, y, z) \
                            .kron(m.identity_map(z, u))
                        check_map_equal(rep, "module-assoc", (x, y, z, u),
                                        lhs, rhs)
        for x in X:
            for y in X:
                ident = m.identity_map(x, y)
                check_map_equal(rep, "module-unit", (x, y),
                                m.action_map(x, x, y)
                                @ a.unit_map(x).kron(ident), ident)
    return rep


def verify_comodule(m: ComoduleData) -> Report:
    """Coassociativity and counit laws of the coaction."""
    m.validate_shape()
    rep = Report()
    c = m.base
    X = c.objects
    for x in X:
        for z in X:
            for u in X:
                for y in X:
                    lhs = m.coaction_map(x, u, y).kron(
                        LinMap.identity(c.field, c.dim(y, z))) \
                        @ m.coaction_map(x, y, z)
                    rhs = LinMap.identity(c.field, m.dim(x, u)).kron(
                        c.cocomp_map(u, y, z)) @ m.coaction_map(x, u, z)
                    check_map_equal(rep, "comodule-coassoc", (x, u, y, z),
                                    lhs, rhs)
    for x in X:
        for z in X:
            ident = LinMap.identity(c.field, m.dim(x, z))
            check_map_equal(rep, "comodule-counit", (x, z),
                            ident.kron(c.counit_map(z))
                            @ m.coaction_map(x, z, z), ident)
    return rep


# -- stock modules ---------------------------------------------------------------

def regular_module(a: HopfCatData, side: str = "right") -> ModuleData:
    """The base acting on itself by composition."""
    return ModuleData(a, side, dict(a.dims),
                      {k: v for k, v in a.mult.items()})


def regular_comodule(c: DualHopfCatData) -> ComoduleData:
    """The dual base coacting on itself by cocomposition."""
    return ComoduleData(c, dict(c.dims), {k: v for k, v in c.cocomp.items()})


def unit_module(a: HopfCatData, side: str = "left") -> ModuleData:
    """All hom components one-dimensional, acted on through the counit."""
    one = a.field.one
    X = a.objects
    dims = {(x, y): 1 for x in X for y in X}
    action = {}
    for x in X:
        for y in X:
            for z in X:
                if side == "left":
                    d = a.dim(x, y)
                    action[(x, y, z)] = [[[a.counit[(x, y)][i]]]
                                         for i in range(d)]
                else:
                    d = a.dim(y, z)
                    action[(x, y, z)] = [[[a.counit[(y, z)][j]]
                                          for j in range(d)]]
    return ModuleData(a, side, dims, action)


# -- module <-> comodule ------------------------------------------------------------

def comodule_to_module(m: ComoduleData) -> ModuleData:
    """Right action through the coaction: m·a pairs a against the C-leg.

    The base of the result is the finite dual of the comodule's base.
    """
    c = m.base
    a = undualize(c)
    X = c.objects
    dims = dict(m.dims)
    action = {}
    for x in X:
        for z in X:
            for y in X:
                # psi(x,z,y): M(x,z) ⊗ A(z,y) → M(x,y); A(z,y) = C(y,z)*
                r = m.coaction[(x, y, z)]
                d1, d2, d3 = m.dim(x, z), a.dim(z, y), m.dim(x, y)
                action[(x, z, y)] = [[[r[i][k][j] for k in range(d3)]
                                      for j in range(d2)] for i in range(d1)]
    return ModuleData(a, "right", dims, action)


def module_to_comodule(m: ModuleData) -> ComoduleData:
    """Coaction through the action against the coordinate dual basis."""
    if m.side != "right":
        raise BaseMismatchError("the comodule translation acts on right modules")
    a = m.base
    c = dualize(a)
    X = a.objects
    dims = dict(m.dims)
    coaction = {}
    for x in X:
        for y in X:
            for z in X:
                # rho(x,y,z): M(x,z) → M(x,y) ⊗ C(y,z); C(y,z) = A(z,y)*
                p = m.action[(x, z, y)]
                d1, d2, d3 = m.dim(x, z), m.dim(x, y), c.dim(y, z)
                coaction[(x, y, z)] = [[[p[i][k][j] for k in range(d3)]
                                        for j in range(d2)]
                                       for i in range(d1)]
    return ComoduleData(c, dims, coaction)


def tensor_modules(m: ModuleData, n: ModuleData) -> ModuleData:
    """Componentwise tensor with the diagonal action through comultiplication."""
    if m.side != n.side:
        raise BaseMismatchError("tensor factors must have the same side")
    if m.base != n.base:
        raise BaseMismatchError("tensor factors must share their base")
    a = m.base
    f = a.field
    X = a.objects
    dims = {(x, y): m.dim(x, y) * n.dim(x, y) for x in X for y in X}
    action = {}
    for x in X:
        for y in X:
            for z in X:
                if m.side == "left":
                    da = a.dim(x, y)
                    dm, dn = m.dim(y, z), n.dim(y, z)
                    # A ⊗ (M⊗N) → A⊗A⊗M⊗N → A⊗M⊗A⊗N → M'⊗N'
                    big = (m.action_map(x, y, z).kron(n.action_map(x, y, z))
                           @ LinMap.identity(f, da)
                           .kron(swap_map(f, da, dm))
                           .kron(LinMap.identity(f, dn))
                           @ a.comult_map(x, y)
                           .kron(LinMap.identity(f, dm * dn)))
                    d1, d2 = da, dm * dn
                else:
                    dm, dn = m.dim(x, y), n.dim(x, y)
                    da = a.dim(y, z)
                    # (M⊗N) ⊗ A → M⊗N⊗A⊗A → M⊗A⊗N⊗A → M'⊗N'
                    big = (m.action_map(x, y, z).kron(n.action_map(x, y, z))
                           @ LinMap.identity(f, dm)
                           .kron(swap_map(f, dn, da))
                           .kron(LinMap.identity(f, da))
                           @ LinMap.identity(f, dm * dn)
                           .kron(a.comult_map(y, z)))
                    d1, d2 = dm * dn, da
                d3 = dims[(x, z)]
                t = [[[big.entries[k][i * d2 + j] for k in range(d3)]
                      for j in range(d2)] for i in range(d1)]
                action[(x, y, z)] = t
    return ModuleData(a, m.side, dims, action)

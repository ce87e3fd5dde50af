"""Stock structures used throughout the test-suite and shipped as files.

Everything is built over an arbitrary exact field (rationals by default):
group algebras of small cyclic groups, linearized pair groupoids, a disjoint
union groupoid, the classical four-dimensional Hopf algebra with
non-involutive antipode, the two-element idempotent-monoid bialgebra (which
admits no antipode), and two graded fixtures on a two-element group — one
strongly graded, one with a vanishing component.
"""

from __future__ import annotations

from .core import HopfCatData
from .graded import GradedHopfData, GroupTable
from .groupoid import (GroupoidData, cyclic_group_groupoid, disjoint_union,
                       linearize_groupoid, pair_groupoid)
from .scalars import QQ, Field


def singleton_hopf(field: Field, dim: int, mult, unit, comult, counit,
                   antipode=None, obj: str = "*") -> HopfCatData:
    """Wrap classical one-object structure constants as a Hopf category."""
    return HopfCatData(
        field, (obj,), {(obj, obj): dim}, {(obj, obj, obj): mult},
        {obj: unit}, {(obj, obj): comult}, {(obj, obj): counit},
        None if antipode is None else {(obj, obj): antipode})


def group_algebra(field: Field, n: int) -> HopfCatData:
    """kZ/n with grouplike basis g0..g(n-1) and inversion antipode."""
    zero, one = field.zero, field.one
    mult = [[[one if k == (i + j) % n else zero for k in range(n)]
             for j in range(n)] for i in range(n)]
    unit = [one if i == 0 else zero for i in range(n)]
    comult = [[[one if i == j == k else zero for k in range(n)]
               for j in range(n)] for i in range(n)]
    counit = [one] * n
    antipode = [[one if j == (-i) % n else zero for i in range(n)]
                for j in range(n)]
    return singleton_hopf(field, n, mult, unit, comult, counit, antipode)


def taft_four_dim(field: Field) -> HopfCatData:
    """The classical 4-dimensional Hopf algebra on 1, g, x, gx with g^2 = 1,
    x^2 = 0, xg = -gx; its antipode squares to the non-identity involution."""
    zero, one = field.zero, field.one

    def scal(n: int):
        return field.of(n)

    d = 4  # basis order: 1, g, x, w (w = gx)
    mult = [[[zero] * d for _ in range(d)] for _ in range(d)]

    def set_prod(i, j, k, coeff=1):
        mult[i][j][k] = scal(coeff)

    I, G, Xx, W = 0, 1, 2, 3
    table = {
        (I, I): (I, 1), (I, G): (G, 1), (I, Xx): (Xx, 1), (I, W): (W, 1),
        (G, I): (G, 1), (G, G): (I, 1), (G, Xx): (W, 1), (G, W): (Xx, 1),
        (Xx, I): (Xx, 1), (Xx, G): (W, -1), (W, I): (W, 1), (W, G): (Xx, -1),
    }
    for (i, j), (k, c) in table.items():
        set_prod(i, j, k, c)
    # x·x = x·w = w·x = w·w = 0 (left unset)

    unit = [one, zero, zero, zero]
    comult = [[[zero] * d for _ in range(d)] for _ in range(d)]
    comult[I][I][I] = one
    comult[G][G][G] = one
    comult[Xx][I][Xx] = one   # x ↦ 1⊗x + x⊗g
    comult[Xx][Xx][G] = one
    comult[W][G][W] = one     # w ↦ g⊗w + w⊗1
    comult[W][W][I] = one
    counit = [one, one, zero, zero]
    antipode = [[zero] * d for _ in range(d)]  # S: 1↦1, g↦g, x↦w, w↦-x
    antipode[I][I] = one
    antipode[G][G] = one
    antipode[W][Xx] = one
    antipode[Xx][W] = -one
    return singleton_hopf(field, d, mult, unit, comult, counit, antipode)


def idempotent_monoid_bialgebra(field: Field) -> HopfCatData:
    """The monoid bialgebra of {1, z} with z·z = z; grouplike z forces any
    antipode candidate to fail, and its Galois map is singular."""
    zero, one = field.zero, field.one
    mult = [[[one, zero], [zero, one]], [[zero, one], [zero, one]]]
    unit = [one, zero]
    comult = [[[one, zero], [zero, zero]], [[zero, zero], [zero, one]]]
    counit = [one, one]
    return singleton_hopf(field, 2, mult, unit, comult, counit, None)


def idempotent_antipode_candidates(field: Field) -> dict[str, list]:
    """Candidate antipode matrices for the idempotent-monoid bialgebra;
    every one of them violates the antipode identities (none can exist)."""
    zero, one = field.zero, field.one
    return {
        "identity": [[one, zero], [zero, one]],
        "collapse-to-unit": [[one, one], [zero, zero]],
        "kill-z": [[one, zero], [zero, zero]],
    }


# -- groupoid fixtures ---------------------------------------------------------

def z2_groupoid() -> GroupoidData:
    return cyclic_group_groupoid(2, "*")


def z3_groupoid() -> GroupoidData:
    return cyclic_group_groupoid(3, "*")


def pair_groupoid_2() -> GroupoidData:
    return pair_groupoid(("1", "2"))


def pair_groupoid_3() -> GroupoidData:
    return pair_groupoid(("1", "2", "3"))


def disjoint_union_groupoid() -> GroupoidData:
    """Z/2 at object 'a' next to a trivial group at object 'b'."""
    z2 = GroupoidData(("a",), (("e", "a", "a"), ("s", "a", "a")),
                      {"a": "e"},
                      {("e", "e"): "e", ("e", "s"): "s",
                       ("s", "e"): "s", ("s", "s"): "e"},
                      {"e": "e", "s": "s"})
    triv = GroupoidData(("b",), (("t", "b", "b"),), {"b": "t"},
                        {("t", "t"): "t"}, {"t": "t"})
    return disjoint_union(z2, triv)


# -- graded fixtures -------------------------------------------------------------

def _z2_table() -> GroupTable:
    return GroupTable(("e", "g"), {("e", "e"): "e", ("e", "g"): "g",
                                   ("g", "e"): "g", ("g", "g"): "e"})


def strongly_graded_z2(field: Field) -> GradedHopfData:
    """kZ/2 sliced by degree: both components one-dimensional, all products 1."""
    one = field.one
    line = [[[one]]]
    return GradedHopfData(
        field, _z2_table(), {"e": 1, "g": 1},
        {("e", "e"): line, ("e", "g"): line, ("g", "e"): line,
         ("g", "g"): line},
        [one],
        {"e": [[[one]]], "g": [[[one]]]},
        {"e": [one], "g": [one]},
        {"e": [[one]], "g": [[one]]})


def zero_component_graded_z2(field: Field) -> GradedHopfData:
    """Trivial algebra graded by Z/2 with an empty odd component."""
    one = field.one
    return GradedHopfData(
        field, _z2_table(), {"e": 1, "g": 0},
        {("e", "e"): [[[one]]], ("e", "g"): [[]],
         ("g", "e"): [], ("g", "g"): []},
        [one],
        {"e": [[[one]]], "g": []},
        {"e": [one], "g": []},
        {"e": [[one]], "g": []})


# -- registry -------------------------------------------------------------------

def hopf_fixtures(field: Field = QQ) -> dict[str, HopfCatData]:
    """Every stock structure that passes the full Hopf level."""
    from .graded import from_graded
    return {
        "kz2": group_algebra(field, 2),
        "kz3": group_algebra(field, 3),
        "taft4": taft_four_dim(field),
        "pair2": linearize_groupoid(pair_groupoid_2(), field),
        "pair3": linearize_groupoid(pair_groupoid_3(), field),
        "disjoint": linearize_groupoid(disjoint_union_groupoid(), field),
        "graded-z2-strong": from_graded(strongly_graded_z2(field)),
        "graded-z2-zero": from_graded(zero_component_graded_z2(field)),
    }

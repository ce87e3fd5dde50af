import pytest

from hopfcat.dual import dualize
from hopfcat.fixtures import group_algebra
from hopfcat.modules import (BaseMismatchError, ModuleData,
                             comodule_to_module, module_to_comodule,
                             regular_comodule, regular_module, tensor_modules,
                             unit_module, verify_comodule, verify_module)
from hopfcat.scalars import QQ

ALL = ["kz2", "kz3", "taft4", "pair2", "pair3", "disjoint",
       "graded-z2-strong", "graded-z2-zero"]


@pytest.mark.parametrize("name", ALL)
def test_regular_module_valid(hopf_fixtures, name):
    for side in ("right", "left"):
        rep = verify_module(regular_module(hopf_fixtures[name], side))
        assert rep.overall, rep.table()


@pytest.mark.parametrize("name", ALL)
def test_regular_comodule_valid(hopf_fixtures, name):
    rep = verify_comodule(regular_comodule(dualize(hopf_fixtures[name])))
    assert rep.overall, rep.table()


def test_zero_action_fails_unit_law(hopf_fixtures):
    a = hopf_fixtures["kz2"]
    zero = {k: [[[QQ.zero] * 2 for _ in range(2)] for _ in range(2)]
            for k in a.mult}
    rep = verify_module(ModuleData(a, "right", dict(a.dims), zero))
    assert not rep.overall
    assert {it.axiom for it in rep.failed()} == {"module-unit"}


@pytest.mark.parametrize("name", ALL)
def test_comodule_module_roundtrips_exact(hopf_fixtures, name):
    a = hopf_fixtures[name]
    c = dualize(a)
    cm = regular_comodule(c)
    m = comodule_to_module(cm)
    assert verify_module(m).overall
    assert module_to_comodule(m) == cm

    rm = regular_module(a, "right")
    cm2 = module_to_comodule(rm)
    assert verify_comodule(cm2).overall
    assert comodule_to_module(cm2) == rm


def test_regular_comodule_of_dual_gives_dual_regular_action():
    # two-dimensional hand check: the induced action pairs the cocomposition
    a = group_algebra(QQ, 2)
    c = dualize(a)
    m = comodule_to_module(regular_comodule(c))
    assert m.base == a          # double dual collapses to the original
    t = m.action[("*", "*", "*")]
    r = c.cocomp[("*", "*", "*")]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                assert t[i][j][k] == r[i][k][j]


def test_module_to_comodule_needs_right_side(hopf_fixtures):
    with pytest.raises(BaseMismatchError):
        module_to_comodule(regular_module(hopf_fixtures["kz2"], "left"))


@pytest.mark.parametrize("name", ["kz2", "pair2", "taft4"])
@pytest.mark.parametrize("side", ["left", "right"])
def test_tensor_of_regulars_valid(hopf_fixtures, name, side):
    m = regular_module(hopf_fixtures[name], side)
    t = tensor_modules(m, m)
    assert t.dims == {k: v * v for k, v in m.dims.items()}
    assert verify_module(t).overall


def test_unit_module_is_two_sided_unit(hopf_fixtures):
    for name in ("kz2", "pair2"):
        a = hopf_fixtures[name]
        m = regular_module(a, "left")
        j = unit_module(a, "left")
        assert verify_module(j).overall
        mj = tensor_modules(m, j)
        jm = tensor_modules(j, m)
        assert mj.dims == m.dims and jm.dims == m.dims
        assert mj.action == m.action
        assert jm.action == m.action


def test_tensor_assoc_on_the_nose(hopf_fixtures):
    m = regular_module(hopf_fixtures["kz2"], "left")
    assert tensor_modules(tensor_modules(m, m), m) \
        == tensor_modules(m, tensor_modules(m, m))


def test_tensor_side_and_base_mismatch(hopf_fixtures):
    a = hopf_fixtures["kz2"]
    with pytest.raises(BaseMismatchError):
        tensor_modules(regular_module(a, "left"), regular_module(a, "right"))
    with pytest.raises(BaseMismatchError):
        tensor_modules(regular_module(a, "left"),
                       regular_module(hopf_fixtures["kz3"], "left"))

import json
import os

from hopfcat.cli import main
from hopfcat.fileformat import load, save
from hopfcat.fixtures import group_algebra
from hopfcat.scalars import GF, QQ


def fx(fixture_dir, name):
    return os.path.join(fixture_dir, name + ".hc")


# -- verify -------------------------------------------------------------------------

def test_verify_passing_fixture(fixture_dir, capsys):
    assert main(["verify", fx(fixture_dir, "pair3")]) == 0
    assert "pass" in capsys.readouterr().out


def test_verify_levels(fixture_dir):
    assert main(["verify", fx(fixture_dir, "idempotent"),
                 "--level", "semihopf"]) == 0
    assert main(["verify", fx(fixture_dir, "idempotent"),
                 "--level", "category"]) == 0
    # hopf level needs an antipode: usage error
    assert main(["verify", fx(fixture_dir, "idempotent"),
                 "--level", "hopf"]) == 2


def test_verify_rejects_every_candidate_antipode(fixture_dir):
    for cand in ("identity", "collapse_to_unit", "kill_z"):
        path = fx(fixture_dir, f"idempotent_candidate_{cand}")
        assert main(["--quiet", "verify", path, "--level", "hopf"]) == 1


def test_verify_extra_checks(fixture_dir):
    assert main(["--quiet", "verify", fx(fixture_dir, "kz3"),
                 "--strictness", "--antipode-theorems"]) == 0
    # a valid structure whose antipode is not involutive still verifies:
    # the three twisted conditions are measurements, not axioms
    assert main(["--quiet", "verify", fx(fixture_dir, "taft4"),
                 "--antipode-theorems"]) == 0


def test_verify_other_kinds(fixture_dir):
    for name in ("pair2_groupoid", "graded_z2_strong_graded", "kz2_dual",
                 "kz2_regular_module", "kz2_regular_hopf_module",
                 "kz2_dual_regular_comodule"):
        assert main(["--quiet", "verify", fx(fixture_dir, name)]) == 0


def test_verify_weak_output_of_pack(fixture_dir, tmp_path):
    out = str(tmp_path / "w.hc")
    assert main(["--quiet", "transform", fx(fixture_dir, "pair2"),
                 "pack", out]) == 0
    assert main(["--quiet", "verify", out]) == 0


def test_verify_parse_error_exit(tmp_path):
    bad = tmp_path / "bad.hc"
    bad.write_text("format 1\nkind hopf-category\nfield q\nobjects *\n"
                   "antipode no\ndim * * 1\nmult * * * 0 0 7 1\n")
    assert main(["--quiet", "verify", str(bad)]) == 2
    assert main(["--quiet", "verify", str(tmp_path / "missing.hc")]) == 2


def test_verify_report_and_manifest(fixture_dir, tmp_path):
    rep = str(tmp_path / "r.jsonl")
    assert main(["--quiet", "--report", rep, "verify",
                 fx(fixture_dir, "kz2")]) == 0
    records = [json.loads(line) for line in open(rep)]
    assert all(r["ok"] for r in records)
    assert {"axiom", "objects", "ok", "witness", "residual", "failures"} \
        <= set(records[0])
    manifest = json.load(open(rep + ".manifest.json"))
    assert manifest["command"] == "verify"
    assert manifest["inputs"][0]["digest"]
    assert manifest["seed"] == 0


# -- transform ----------------------------------------------------------------------

def test_from_groupoid_matches_fixture(fixture_dir, tmp_path):
    out = str(tmp_path / "p2.hc")
    assert main(["--quiet", "transform", fx(fixture_dir, "pair2_groupoid"),
                 "from-groupoid", out]) == 0
    assert open(out).read() == open(fx(fixture_dir, "pair2")).read()


def test_from_groupoid_over_prime_field(fixture_dir, tmp_path):
    out = str(tmp_path / "p2f5.hc")
    assert main(["--quiet", "--field", "fp:5", "transform",
                 fx(fixture_dir, "pair2_groupoid"), "from-groupoid",
                 out]) == 0
    assert load(out).field == GF(5)


def test_from_graded_fixtures(fixture_dir, tmp_path):
    out = str(tmp_path / "g.hc")
    assert main(["--quiet", "transform",
                 fx(fixture_dir, "graded_z2_strong_graded"), "from-graded",
                 out]) == 0
    assert open(out).read() == open(fx(fixture_dir, "graded_z2_strong")).read()


def test_pack_pipeline(fixture_dir, tmp_path):
    out = str(tmp_path / "w.hc")
    assert main(["--quiet", "transform", fx(fixture_dir, "pair2"), "pack",
                 out]) == 0
    w = load(out)
    assert w.total_dim == 4
    out2 = str(tmp_path / "wd.hc")
    assert main(["--quiet", "transform", fx(fixture_dir, "pair2_dual"),
                 "pack-dual", out2]) == 0


def test_dualize_undualize_byte_identical(fixture_dir, tmp_path):
    for name in ("kz2", "kz3", "taft4", "pair2", "pair3", "disjoint",
                 "graded_z2_strong", "graded_z2_zero"):
        d = str(tmp_path / f"{name}.dual.hc")
        back = str(tmp_path / f"{name}.back.hc")
        assert main(["--quiet", "transform", fx(fixture_dir, name),
                     "dualize", d]) == 0
        assert main(["--quiet", "transform", d, "undualize", back]) == 0
        assert open(back).read() == open(fx(fixture_dir, name)).read()


def test_undualize_dualize_byte_identical(fixture_dir, tmp_path):
    first = str(tmp_path / "a.hc")
    second = str(tmp_path / "c.hc")
    assert main(["--quiet", "transform", fx(fixture_dir, "pair2_dual"),
                 "undualize", first]) == 0
    assert main(["--quiet", "transform", first, "dualize", second]) == 0
    assert open(second).read() == open(fx(fixture_dir, "pair2_dual")).read()


def test_transform_determinism(fixture_dir, tmp_path):
    a = str(tmp_path / "a.hc")
    b = str(tmp_path / "b.hc")
    for out in (a, b):
        assert main(["--quiet", "transform", fx(fixture_dir, "taft4"),
                     "opposite", out]) == 0
    assert open(a).read() == open(b).read()


def test_bimonoid_roundtrip_files(fixture_dir, tmp_path):
    bim = str(tmp_path / "b.hc")
    back = str(tmp_path / "back.hc")
    assert main(["--quiet", "transform", fx(fixture_dir, "kz3"), "bimonoid",
                 bim]) == 0
    assert main(["--quiet", "transform", bim, "unbimonoid", back]) == 0
    assert open(back).read() == \
        open(fx(fixture_dir, "kz3_stripped")).read()


def test_transform_kind_mismatch(fixture_dir, tmp_path):
    assert main(["--quiet", "transform", fx(fixture_dir, "kz2"),
                 "from-groupoid", str(tmp_path / "x.hc")]) == 2
    assert main(["--quiet", "transform", fx(fixture_dir, "pair2_groupoid"),
                 "pack", str(tmp_path / "x.hc")]) == 2


def test_transform_aborts_on_nonverifying_output(tmp_path):
    # a bialgebra whose square antipode map is inconsistent: packing a
    # hand-broken category must abort with the internal-breach code
    a = group_algebra(QQ, 2)
    a.antipode[("*", "*")] = [[QQ.one, QQ.one], [QQ.zero, QQ.zero]]
    src = str(tmp_path / "broken.hc")
    save(src, a)
    out = str(tmp_path / "w.hc")
    assert main(["--quiet", "transform", src, "pack", out]) == 3
    assert not os.path.exists(out)


# -- analyze ------------------------------------------------------------------------

def test_analyze_recover_antipode(fixture_dir, tmp_path):
    out = str(tmp_path / "rec.hc")
    assert main(["--quiet", "analyze", fx(fixture_dir, "taft4_stripped"),
                 "recover-antipode", "--out", out]) == 0
    assert open(out).read() == open(fx(fixture_dir, "taft4")).read()


def test_analyze_recover_antipode_failure(fixture_dir, capsys):
    assert main(["analyze", fx(fixture_dir, "idempotent"),
                 "recover-antipode"]) == 1
    out = capsys.readouterr().out
    assert "rank 3" in out


def test_analyze_integrals(fixture_dir, tmp_path, capsys):
    listing = str(tmp_path / "ints.txt")
    assert main(["analyze", fx(fixture_dir, "kz2"), "integrals",
                 "--out", listing]) == 0
    text = open(listing).read()
    assert "dimension 1" in text
    assert "(1, 0)" in text


def test_analyze_coinvariants(fixture_dir, capsys):
    assert main(["analyze", fx(fixture_dir, "kz2_regular_hopf_module"),
                 "coinvariants"]) == 0
    assert "dimension 1" in capsys.readouterr().out


def test_analyze_can_ranks(fixture_dir, capsys):
    assert main(["analyze", fx(fixture_dir, "kz3"), "can-ranks"]) == 0
    assert main(["analyze", fx(fixture_dir, "idempotent"), "can-ranks"]) == 1
    assert "SINGULAR" in capsys.readouterr().out


def test_analyze_strictness(fixture_dir):
    assert main(["--quiet", "analyze", fx(fixture_dir, "pair3"),
                 "strictness"]) == 0
    assert main(["--quiet", "analyze", fx(fixture_dir, "disjoint"),
                 "strictness"]) == 1
    assert main(["--quiet", "analyze", fx(fixture_dir, "graded_z2_strong"),
                 "strictness"]) == 0
    assert main(["--quiet", "analyze", fx(fixture_dir, "graded_z2_zero"),
                 "strictness"]) == 1

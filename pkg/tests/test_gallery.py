from dataclasses import replace
from fractions import Fraction

import pytest

from delpezzo.classify import classify_rows
from delpezzo.gallery import (
    EXPECTED_SUMMARY,
    CompleteIntersection,
    Hypersurface,
    PointBlowup,
    build_gallery,
    complete_intersection_is_del_pezzo,
    complete_intersection_k2,
    construction_k2,
    hypersurface_is_del_pezzo,
    hypersurface_k2,
    quadric_surface_lattice,
    verify_gallery,
)
from delpezzo.lattice import (
    blowup,
    canonical_square,
    hirzebruch,
    intersect,
    projective_plane,
    proper_transform,
    quadric,
)


# ---------------------------------------------------------------------------
# adjunction formulas


def test_hypersurface_k2():
    assert hypersurface_k2(2) == 8
    assert hypersurface_k2(3) == 3
    assert hypersurface_k2(1) == 9
    with pytest.raises(ValueError):
        hypersurface_k2(2, ambient_dim=4)
    with pytest.raises(ValueError):
        hypersurface_k2(0)


def test_hypersurface_del_pezzo_flag():
    assert hypersurface_is_del_pezzo(1) and hypersurface_is_del_pezzo(3)
    assert not hypersurface_is_del_pezzo(4)
    assert not hypersurface_is_del_pezzo(5)


def test_complete_intersection_k2():
    assert complete_intersection_k2((2, 2), 4) == 4
    assert complete_intersection_k2((3,), 3) == 3  # reduces to the hypersurface case
    assert complete_intersection_k2((3,), 3) == hypersurface_k2(3)
    with pytest.raises(ValueError):
        complete_intersection_k2((2, 2), 5)


def test_complete_intersection_degenerate_case():
    # (2,2,2) in 5-space: the formula gives 0 and K is not anti-ample
    assert complete_intersection_k2((2, 2, 2), 5) == 0
    assert not complete_intersection_is_del_pezzo((2, 2, 2), 5)
    assert complete_intersection_is_del_pezzo((2, 2), 4)


# ---------------------------------------------------------------------------
# the gallery


def test_build_gallery_shape():
    records = build_gallery()
    assert len(records) == 8
    assert [rec.p for rec in records].count(3) == 1
    by_id = {rec.id: rec for rec in records}
    assert by_id["fermat-blowup"].z_model == hirzebruch(1)
    assert by_id["fermat-blowup"].kx_square == 6
    assert by_id["fermat-blowup"].epsilon == 1
    assert by_id["cone-blowup"].z_model == hirzebruch(2)
    assert by_id["cone-blowup"].kx_square == 6
    assert by_id["cone-blowup"].epsilon == 0
    assert by_id["maddock-1"].kx_square == 1
    assert by_id["maddock-1"].epsilon == 0
    assert by_id["maddock-1"].z_model == projective_plane()


def test_gallery_matches_summary_tables():
    records = {rec.id: rec for rec in build_gallery()}
    for p, table in EXPECTED_SUMMARY.items():
        for rid, k2, eps, model in table:
            rec = records[rid]
            assert rec.p == p
            assert (rec.kx_square, rec.epsilon, rec.z_model) == (k2, eps, model)


def test_construction_k2_recomputation():
    for rec in build_gallery():
        k2 = construction_k2(rec.construction)
        if k2 is not None:
            assert k2 == rec.kx_square, rec.id


def test_blowup_records_lattice_detail():
    # degree-8 quadric surface base, blown up at a degree-2 point
    base = quadric_surface_lattice()
    assert canonical_square(base) == 8
    x = blowup(base, 2)
    assert canonical_square(x) == 6
    ct = proper_transform(x, base.divisor(1), 1)
    assert intersect(ct, ct) == 0
    assert intersect(-x.canonical, ct) == 2

    records = {rec.id: rec for rec in build_gallery()}
    for rid in ("fermat-blowup", "cone-blowup"):
        c = records[rid].construction
        assert isinstance(c, PointBlowup)
        assert c.center_degree == 2
        assert intersect(c.curve, c.curve) == 2


def test_geometric_quadric_matches_diagonal_row():
    # K^2 = 4 with eps = 1 picks out the O(1,1) quadric row: 4 = 1 * 2^(1+1)
    rec = next(r for r in build_gallery() if r.id == "geometric-quadric")
    matches = [
        row
        for row in classify_rows(2)
        if row.model == quadric() and row.kx_value(rec.epsilon) == rec.kx_square
    ]
    assert len(matches) == 1
    assert matches[0].e == quadric().divisor(1, 1)


def test_gallery_in_classification():
    for rec in build_gallery():
        matches = [
            row
            for row in classify_rows(rec.p)
            if row.model == rec.z_model and row.kx_value(rec.epsilon) == rec.kx_square
        ]
        assert len(matches) == 1, rec.id


# ---------------------------------------------------------------------------
# the verifier


def test_verify_gallery_passes():
    report = verify_gallery()
    assert report.ok
    assert report.failures() == ()
    fields = {(c.record_id, c.field) for c in report.checks}
    assert ("fermat-blowup", "proper_transform_square") in fields
    assert ("fermat-blowup", "anti_canonical_dot_transform") in fields
    assert ("maddock-2", "classification_matches") in fields


def test_verify_names_record_and_field_on_mismatch():
    records = list(build_gallery())
    bad = replace(records[0], kx_square=Fraction(5))
    report = verify_gallery(tuple([bad] + records[1:]))
    assert not report.ok
    failing = {(c.record_id, c.field) for c in report.failures()}
    assert (bad.id, "kx_square") in failing
    # the lattice recomputation disagrees with the tampered value too
    assert (bad.id, "construction_k2") in failing


def test_verify_detects_wrong_model():
    records = list(build_gallery())
    idx = next(i for i, r in enumerate(records) if r.id == "cone-blowup")
    bad = replace(records[idx], z_model=hirzebruch(3))
    records[idx] = bad
    report = verify_gallery(tuple(records))
    failing = {(c.record_id, c.field) for c in report.failures()}
    assert ("cone-blowup", "z_model") in failing
    assert ("cone-blowup", "classification_matches") in failing


def test_verify_detects_missing_record():
    records = tuple(r for r in build_gallery() if r.id != "maddock-1")
    report = verify_gallery(records)
    failing = {(c.record_id, c.field) for c in report.failures()}
    assert ("maddock-1", "present") in failing


def test_verify_detects_unknown_record():
    records = list(build_gallery())
    stray = replace(records[0], id="mystery-surface")
    report = verify_gallery(tuple(records + [stray]))
    failing = {(c.record_id, c.field) for c in report.failures()}
    assert ("mystery-surface", "id") in failing

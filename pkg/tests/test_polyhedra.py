"""Fourier-Motzkin feasibility, redundancy removal, and 2D enumeration."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lgdual.errors import DimensionMismatchError, EmptyInteriorError
from lgdual.linalg import IntMatrix
from lgdual.polyhedra import (
    FacetReport,
    HalfspaceSystem,
    facets,
    infeasibility_certificate,
    strict_interior_nonempty,
    strict_interior_point,
    vertices_and_rays_2d,
)


def system(rows, offsets):
    return HalfspaceSystem(IntMatrix.from_rows(rows), offsets)


OM2 = system([(1, 0), (-1, 2), (0, 1)], (0, 1, 0))  # x>=0, -x+2y+1>=0, y>=0


@st.composite
def random_systems(draw, max_rows=5):
    r = draw(st.integers(1, max_rows))
    rows = draw(
        st.lists(
            st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
            min_size=r,
            max_size=r,
        )
    )
    offsets = draw(st.lists(st.integers(-2, 2), min_size=r, max_size=r))
    return system(rows, offsets)


def test_contains():
    assert OM2.contains((Fraction(1, 2), Fraction(1, 2)))
    assert OM2.contains((0, 0)) and not OM2.contains((0, 0), strict=True)
    assert not OM2.contains((-1, 0))


def test_offset_length_checked():
    with pytest.raises(DimensionMismatchError):
        system([(1, 0)], (0, 1))


def test_interior_point_known():
    p = strict_interior_point(OM2)
    assert p is not None and OM2.contains(p, strict=True)


def test_interior_empty_line():
    # x >= 0 and -x >= 0 pin x = 0: closed-feasible, no strict interior
    h = system([(1, 0), (-1, 0)], (0, 0))
    assert not strict_interior_nonempty(h)
    assert infeasibility_certificate(h, strict=False) is None


def test_interior_empty_strictly_infeasible():
    h = system([(1,), (-1,)], (0, -1))  # x >= 0, x <= -1
    assert infeasibility_certificate(h, strict=False) is not None


@given(random_systems())
@settings(max_examples=200, deadline=None)
def test_feasibility_verdicts_sound(h):
    point = strict_interior_point(h)
    if point is not None:
        assert h.contains(point, strict=True)
    else:
        lam = infeasibility_certificate(h, strict=True)
        assert lam is not None
        assert all(x >= 0 for x in lam) and any(x > 0 for x in lam)
        combo = [
            sum(l * c for l, c in zip(lam, col))
            for col in zip(*h.c.entries)
        ]
        assert all(x == 0 for x in combo)
        assert sum(l * o for l, o in zip(lam, h.offset)) <= 0


@given(random_systems())
@settings(max_examples=120, deadline=None)
def test_grid_point_implies_feasible(h):
    # one-sided completeness: an exhibited strict grid point forces a
    # feasible verdict
    span = [Fraction(k, 2) for k in range(-6, 7)]
    hit = next(
        (
            (x, y)
            for x in span
            for y in span
            if h.contains((x, y), strict=True)
        ),
        None,
    )
    if hit is not None:
        assert strict_interior_nonempty(h)


def test_nonstrict_certificate_is_strict_negative():
    h = system([(1, 1), (-1, -1)], (0, -2))  # x+y >= 0, x+y <= -2
    lam = infeasibility_certificate(h, strict=False)
    assert lam is not None and all(x >= 0 for x in lam)
    assert sum(l * o for l, o in zip(lam, h.offset)) < 0
    combo = [sum(l * c for l, c in zip(lam, col)) for col in zip(*h.c.entries)]
    assert combo == [0, 0]


# --- facets ------------------------------------------------------------------

def test_facets_all_tight_identity():
    rep = facets(OM2)
    assert rep.irredundant == (0, 1, 2)
    assert rep.is_identity()
    assert rep.kmap == (0, 1, 2)
    assert rep.primitive_normals == IntMatrix.from_rows([(1, 0), (-1, 2), (0, 1)])


def test_facets_drop_weaker_copy():
    # x + 3 >= 0 is implied by x >= 0
    h = system([(1, 0), (-1, 2), (0, 1), (1, 0)], (0, 1, 0, 3))
    rep = facets(h)
    assert rep.irredundant == (0, 1, 2)
    assert rep.kmap == (0, 1, 2, None)


def test_facets_duplicates_keep_first():
    h = system([(1, 0), (1, 0), (0, 1), (-1, -1)], (0, 0, 0, 5))
    rep = facets(h)
    assert 0 in rep.irredundant and 1 not in rep.irredundant


def test_facets_scaled_duplicate_dropped():
    # (2, 0) offset 0 is the same halfplane as (1, 0) offset 0
    h = system([(1, 0), (2, 0), (0, 1), (-1, -1)], (0, 0, 0, 5))
    rep = facets(h)
    assert 1 not in rep.irredundant
    assert 0 in rep.irredundant


def test_facets_need_strict_interior():
    with pytest.raises(EmptyInteriorError):
        facets(system([(1, 0), (-1, 0)], (0, 0)))


def test_facets_idempotent():
    h = system([(1, 0), (-1, 2), (0, 1), (1, 0), (1, 1)], (0, 1, 0, 3, 7))
    rep = facets(h)
    sub = system(
        [h.c[i] for i in rep.irredundant],
        [h.offset[i] for i in rep.irredundant],
    )
    again = facets(sub)
    assert again.is_identity()
    assert again.irredundant == tuple(range(len(rep.irredundant)))


@given(random_systems())
@settings(max_examples=80, deadline=None)
def test_facets_preserve_the_set(h):
    # dropping reported-redundant rows keeps membership unchanged on a grid
    try:
        rep = facets(h)
    except EmptyInteriorError:
        return
    sub = system(
        [h.c[i] for i in rep.irredundant],
        [h.offset[i] for i in rep.irredundant],
    )
    span = [Fraction(k, 2) for k in range(-5, 6)]
    for x in span:
        for y in span:
            assert h.contains((x, y)) == sub.contains((x, y))


# --- 2D enumeration ----------------------------------------------------------

def test_vertices_and_rays_cotangent_total_space():
    verts, rays = vertices_and_rays_2d(OM2)
    assert verts == [(0, 0), (1, 0)]
    assert rays == [(0, 1), (2, 1)]


def test_vertices_unit_square_ccw_from_lexmin():
    h = system([(1, 0), (0, 1), (-1, 0), (0, -1)], (0, 0, 1, 1))
    verts, rays = vertices_and_rays_2d(h)
    assert verts == [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert rays == []


def test_vertices_1d_embedding():
    h = HalfspaceSystem(IntMatrix.from_rows([(1,), (-1,)]), (0, 1))
    verts, rays = vertices_and_rays_2d(h)
    assert verts == [(0, 0), (1, 0)]
    assert rays == []


def test_vertices_1d_halfline():
    h = HalfspaceSystem(IntMatrix.from_rows([(1,)]), (0,))
    verts, rays = vertices_and_rays_2d(h)
    assert verts == [(0, 0)]
    assert rays == [(1, 0)]


def test_vertices_dimension_guard():
    h = HalfspaceSystem(IntMatrix.from_rows([(1, 0, 0)]), (0,))
    with pytest.raises(DimensionMismatchError):
        vertices_and_rays_2d(h)


def test_row_scaling_does_not_change_geometry():
    a = system([(1, 0), (-1, 2), (0, 1)], (0, 1, 0))
    b = system([(3, 0), (-2, 4), (0, 5)], (0, 2, 0))
    va, ra = vertices_and_rays_2d(a)
    vb, rb = vertices_and_rays_2d(b)
    assert va == vb and ra == rb


@given(st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=40)
def test_translation_moves_vertices(ux, uy):
    # replacing offset by offset + C @ u translates P by -u
    c = OM2.c
    shifted = [
        OM2.offset[i] + c[i][0] * ux + c[i][1] * uy for i in range(c.rows)
    ]
    verts, rays = vertices_and_rays_2d(HalfspaceSystem(c, shifted))
    base_verts, base_rays = vertices_and_rays_2d(OM2)
    assert rays == base_rays
    assert sorted(verts) == sorted((x - ux, y - uy) for x, y in base_verts)

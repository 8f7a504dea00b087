import pytest

from chipfire.errors import PreconditionError
from chipfire.forests import (
    check_forest,
    forest_number,
    reduced_laplacian_group,
    spanning_forests,
)
from chipfire.homology import critical_group, homology
from tests.conftest import random_complex


def test_tetrahedron_2forests(named):
    forests = spanning_forests(named["tetrahedron"], 2, "all")
    assert len(forests) == 4
    subsets = {f.face_subset for f in forests}
    assert subsets == {(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)}
    assert all(f.is_spanning_forest for f in forests)
    assert all(f.torsion_order == 1 for f in forests)


def test_projective_plane_unique_forest(named):
    pp = named["projective_plane"]
    forests = spanning_forests(pp, 2, "all")
    assert len(forests) == 1
    assert forests[0].face_subset == tuple(range(10))
    assert forests[0].torsion_order == 2
    assert forest_number(pp, 2) == 4


def test_triangle_spanning_trees(named):
    forests = spanning_forests(named["triangle"], 1, "all")
    assert {f.face_subset for f in forests} == {(0, 1), (0, 2), (1, 2)}
    assert forest_number(named["triangle"], 1) == 3


def test_seventeen_forest_number(named):
    c = named["seventeen"]
    assert forest_number(c, 3) == 1
    forests = spanning_forests(c, 3, "all")
    assert len(forests) == 1
    assert forests[0].face_subset == tuple(range(17))


def test_first_mode_greedy(named):
    first = spanning_forests(named["tetrahedron"], 2, "first")[0]
    assert first.face_subset == (0, 1, 2)
    assert first.is_spanning_forest


def test_check_mode_rejects_unknown_faces(named):
    with pytest.raises(PreconditionError):
        spanning_forests(named["triangle"], 1, "check", subset=[0, 99])


def test_check_mode_on_non_forest(named):
    cert = check_forest(named["triangle"], 1, (0, 1, 2))  # the full cycle
    assert not cert.is_spanning_forest
    assert not cert.checks[0]  # has a cycle


def test_two_of_three_conditions_imply_third(named, rng):
    import itertools

    complexes = [named["tetrahedron"], named["staco"], named["diamond"]]
    complexes += [random_complex(rng) for _ in range(8)]
    for c in complexes:
        for i in range(1, c.dim + 1):
            n = c.face_count(i)
            if n > 8:
                continue
            for size in range(0, n + 1):
                for subset in itertools.combinations(range(n), size):
                    cert = check_forest(c, i, subset)
                    if sum(cert.checks) >= 2:
                        assert all(cert.checks)


def test_cut_flow_identity_corpus(named):
    for name, i in [
        ("tetrahedron", 2),
        ("projective_plane", 2),
        ("triangle", 1),
        ("two_triangles", 1),
        ("annulus", 2),
        ("staco", 2),
        ("seventeen", 3),
    ]:
        c = named[name]
        tau = forest_number(c, i)
        crit = critical_group(c, i - 1)
        assert tau == crit.group.torsion_order, name


def test_cut_flow_identity_random(rng):
    checked = 0
    while checked < 30:
        c = random_complex(rng)
        for i in range(1, c.dim + 1):
            if c.face_count(i) > 12:
                continue
            tau = forest_number(c, i)
            assert tau == critical_group(c, i - 1).group.torsion_order
            checked += 1


def test_forest_number_one_iff_skeleton_forest(named, rng):
    complexes = {name: named[name] for name in
                 ("tetrahedron", "projective_plane", "staco", "seventeen")}
    for name, c in complexes.items():
        for i in range(1, c.dim + 1):
            if c.face_count(i) > 17:
                continue
            tau = forest_number(c, i)
            skel_cert = check_forest(c, i, range(c.face_count(i)))
            torsion_free = homology(c, i - 1).group.torsion == ()
            assert (tau == 1) == (skel_cert.is_spanning_forest and torsion_free), (name, i)
            if skel_cert.is_spanning_forest:
                assert len(spanning_forests(c, i, "all")) == 1


def test_reduced_laplacian_tetrahedron(named):
    c = named["tetrahedron"]
    res = reduced_laplacian_group(c, 1, [(1, 2), (1, 3), (1, 4)])
    assert res.theta == ((2, 3), (2, 4), (3, 4))
    assert res.matrix == ((2, -1, 1), (-1, 2, -1), (1, -1, 2))
    assert res.hypothesis_ok
    assert res.cokernel.free_rank == 0
    assert res.cokernel.torsion == (4,)


def test_reduced_laplacian_triangle_graph(named):
    res = reduced_laplacian_group(named["triangle"], 0, [(1,)])
    assert res.cokernel.torsion == (3,)
    assert res.hypothesis_ok


def test_reduced_laplacian_matches_critical_group_when_hypothesis_holds(named, rng):
    cases = [(named["tetrahedron"], 1), (named["triangle"], 0),
             (named["annulus"], 1), (named["seventeen"], 2)]
    for c, i in cases:
        first = spanning_forests(c, i, "first")[0]
        faces = [c.faces(i)[k] for k in first.face_subset]
        res = reduced_laplacian_group(c, i, faces)
        if res.hypothesis_ok:
            assert res.cokernel == critical_group(c, i).group


def test_reduced_laplacian_counterexample(named):
    # the projective plane is a spanning 2-forest of the full complex on
    # six vertices, but carries extra torsion; the reduced Laplacian then
    # computes the wrong group, which must be reported, not hidden
    simplex5 = named["simplex5"]
    pp_faces = [tuple(f) for f in named["projective_plane"].faces(2)]
    res = reduced_laplacian_group(simplex5, 2, pp_faces)
    assert not res.hypothesis_ok
    assert res.cokernel.free_rank == 0
    assert res.cokernel.torsion == (2, 6, 6, 6, 12)
    crit = critical_group(simplex5, 2)
    assert crit.group.torsion == (6, 6, 6, 6)
    assert res.cokernel != crit.group


def test_reduced_laplacian_rejects_non_forest(named):
    with pytest.raises(PreconditionError):
        reduced_laplacian_group(named["triangle"], 1, [(1, 2), (1, 3), (2, 3)])


def test_all_degree_zero_winnable_iff_forest_number_one(named):
    # winnability of every degree-zero chain one dimension down pairs
    # exactly with forest number one
    from chipfire.cones import hilbert_basis
    from chipfire.winnability import all_of_degree_winnable

    for name, i in [
        ("seventeen", 3), ("staco", 2), ("tetrahedron", 2),
        ("projective_plane", 2), ("triangle", 1), ("path3", 1),
        ("two_triangles", 1),
    ]:
        c = named[name]
        tau = forest_number(c, i)
        zero = (0,) * len(hilbert_basis(c, i - 1))
        report = all_of_degree_winnable(c, i - 1, zero)
        assert report.realizable
        assert report.all_winnable == (tau == 1), (name, tau)

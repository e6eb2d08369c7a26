import itertools

from dischar import build_grading, enumerate_closed_orbits, orbit_strata, weyl_k


def test_a1_noncompact_orbits(systems, groups):
    rs, W = systems["A1"], groups["A1"]
    grading = build_grading(rs, (-1,))
    orbits = enumerate_closed_orbits(rs, grading, W)
    assert [o.u.word_str() for o in orbits] == ["e", "s1"]


def test_a2_mixed_orbit_count(systems, groups):
    rs, W = systems["A2"], groups["A2"]
    orbits = enumerate_closed_orbits(rs, build_grading(rs, (1, -1)), W)
    assert len(orbits) == 3


def test_all_compact_single_orbit(systems, groups):
    rs, W = systems["A2"], groups["A2"]
    kdata = weyl_k(rs, build_grading(rs, (1, 1)), W)
    orbits = enumerate_closed_orbits(rs, build_grading(rs, (1, 1)), W, kdata)
    assert len(orbits) == 1
    assert orbits[0].u == W.identity
    # full Bruhat stratification
    strata = orbit_strata(orbits[0], kdata)
    assert [(s.w, s.cell, s.dim) for s in strata] == [
        (w, w, w.length) for w in sorted(W.elements, key=lambda w: (w.length, w.reduced_word))
    ]


def test_strata_examples(systems, groups):
    rs, W = systems["A1"], groups["A1"]
    grading = build_grading(rs, (-1,))
    kdata = weyl_k(rs, grading, W)
    orbits = enumerate_closed_orbits(rs, grading, W, kdata)
    assert [(s.w.word_str(), s.cell.word_str(), s.dim) for s in orbits[0].strata] == [
        ("e", "e", 0)
    ]

    rs2, W2 = systems["A2"], groups["A2"]
    grading2 = build_grading(rs2, (1, -1))
    kdata2 = weyl_k(rs2, grading2, W2)
    orbits2 = enumerate_closed_orbits(rs2, grading2, W2, kdata2)
    first = orbits2[0]
    assert first.u == W2.identity
    assert [(s.w.word_str(), s.cell.word_str(), s.dim) for s in first.strata] == [
        ("e", "e", 0),
        ("s1", "s1", 1),
    ]


def test_orbit_count_and_partition(systems, groups):
    for name in ("A1", "A1xA1", "A2", "B2", "G2"):
        rs, W = systems[name], groups[name]
        for signs in itertools.product((1, -1), repeat=rs.rank):
            grading = build_grading(rs, signs)
            kdata = weyl_k(rs, grading, W)
            orbits = enumerate_closed_orbits(rs, grading, W, kdata)
            assert len(orbits) * kdata.order == W.order
            cells = [s.cell for orbit in orbits for s in orbit.strata]
            assert len(cells) == W.order
            assert set(cells) == set(W.elements)


def test_positive_system_contains_compact_positives(systems, groups):
    for name in ("A2", "B2"):
        rs, W = systems[name], groups[name]
        for signs in itertools.product((1, -1), repeat=rs.rank):
            grading = build_grading(rs, signs)
            for orbit in enumerate_closed_orbits(rs, grading, W):
                assert all(orbit.positive_system[a] == 1 for a in grading.compact_positive)


def test_strata_dims_are_k_lengths(systems, groups):
    rs, W = systems["B2"], groups["B2"]
    grading = build_grading(rs, (1, -1))
    kdata = weyl_k(rs, grading, W)
    for orbit in enumerate_closed_orbits(rs, grading, W, kdata):
        for stratum in orbit.strata:
            assert stratum.dim == kdata.lengthK[stratum.w]
            assert stratum.cell == kdata.weyl.multiply(stratum.w, orbit.u)

import pytest

from pantsdist.surface_model import (
    CurveClass,
    CyclicWord,
    NormalMulticurve,
    build_surface,
    curve_word,
    cut_along,
    dehn_twist,
    geometric_intersection,
    homology_class,
    is_admissible,
    is_separating,
    multicurve_union,
    trace_components,
)


@pytest.fixture(scope="module")
def s2():
    return build_surface(2)


@pytest.fixture(scope="module")
def s3():
    return build_surface(3)


def separating_curve(surface, i=1):
    # boundary of a neighbourhood of the (a_i, b_i) handle
    a, b = 2 * i, 2 * i - 1
    return CurveClass._from_crossing_word(surface, [a, b, -a, -b])


def test_build_surface_counts(s2, s3):
    assert (s2.num_edges, s2.num_triangles) == (9, 6)
    assert (s3.num_edges, s3.num_triangles) == (15, 10)
    # Euler characteristic of the one-vertex complex
    for s in (s2, s3):
        assert 1 - s.num_edges + s.num_triangles == 2 - 2 * s.genus


def test_build_surface_rejects_low_genus():
    with pytest.raises(ValueError):
        build_surface(1)
    with pytest.raises(ValueError):
        build_surface(0)


def test_build_surface_deterministic(s2):
    again = build_surface(2)
    assert again is s2
    assert again.marking["a1"].weights == s2.marking["a1"].weights


def test_marking_intersection_table(s2):
    g = s2.genus
    names = [n for i in range(1, g + 1) for n in ("a%d" % i, "b%d" % i)]
    for x in names:
        for y in names:
            expected = 0
            if x[0] != y[0] and x[1:] == y[1:]:
                expected = 1
            got = geometric_intersection(s2, s2.marking[x], s2.marking[y])
            assert got == expected, (x, y, got)


def test_marking_words_are_generators(s2, s3):
    for s in (s2, s3):
        for i in range(1, s.genus + 1):
            assert curve_word(s, s.marking["a%d" % i]) == CyclicWord([2 * i - 1])
            assert curve_word(s, s.marking["b%d" % i]) == CyclicWord([2 * i])


def test_is_admissible(s2):
    assert is_admissible(s2, [0] * 9)
    assert is_admissible(s2, s2.marking["a1"].weights)
    # DERIVED: bumping one entry breaks the parity condition in some
    # triangle; verify with a direct local check before asserting
    bad = list(s2.marking["a1"].weights)
    bad[0] += 1
    tris, _, _ = s2.tables
    parity_broken = any(
        (bad[sl[0][0]] + bad[sl[1][0]] + bad[sl[2][0]]) % 2 for sl in tris
    )
    assert parity_broken
    assert not is_admissible(s2, bad)
    with pytest.raises(ValueError):
        is_admissible(s2, [0] * 8)


def test_vertex_link_rejected(s2):
    assert not is_admissible(s2, [2] * 9)


def test_trace_components(s2):
    empty = NormalMulticurve(s2, [0] * 9)
    assert trace_components(s2, empty) == []
    a1 = s2.marking["a1"]
    assert trace_components(s2, a1) == [a1]
    a2 = s2.marking["a2"]
    assert geometric_intersection(s2, a1, a2) == 0
    union = multicurve_union(s2, [a1, a2])
    comps = trace_components(s2, union)
    assert sorted(c.weights for c in comps) == sorted([a1.weights, a2.weights])


def test_disjointness_additivity(s2):
    a1, a2 = s2.marking["a1"], s2.marking["a2"]
    sep = separating_curve(s2)
    union = multicurve_union(s2, [a1, a2, sep])
    assert is_admissible(s2, union.weights)
    words = sorted(
        [a1.component_words[0], a2.component_words[0], sep.component_words[0]]
    )
    assert sorted(union.component_words) == words


def test_geometric_intersection_examples(s2):
    a1, b1 = s2.marking["a1"], s2.marking["b1"]
    assert geometric_intersection(s2, a1, a1) == 0
    assert geometric_intersection(s2, a1, b1) == 1
    # DERIVED: |k| * i(a1,b1)^2 = 3, cross-checked by the coordinate-growth
    # oracle in test_twist_growth_oracle
    tw = dehn_twist(s2, b1, a1, 3)
    assert geometric_intersection(s2, tw, a1) == 3


def test_twist_growth_oracle(s2):
    # independent route to i(c,d): the edge weights of T_c^k(d) grow like
    # k * i(c,d) * w_e(c), so the stabilized increment recovers the
    # intersection number without the linking machinery
    a1, b1 = s2.marking["a1"], s2.marking["b1"]
    cases = [
        (b1, a1, 1),
        (dehn_twist(s2, b1, a1, 2), a1, 2),
        (separating_curve(s2), s2.marking["a2"], 0),
    ]
    for c, d, expected in cases:
        e = next(i for i, w in enumerate(c.weights) if w > 0)
        k0 = 2 * d.weights[e] + 3
        w1 = dehn_twist(s2, c, d, k0).weights[e]
        w2 = dehn_twist(s2, c, d, k0 + 1).weights[e]
        w3 = dehn_twist(s2, c, d, k0 + 2).weights[e]
        assert w3 - w2 == w2 - w1
        assert (w2 - w1) % c.weights[e] == 0
        growth = (w2 - w1) // c.weights[e]
        assert growth == expected
        assert geometric_intersection(s2, c, d) == expected


def test_dehn_twist_identities(s2):
    a1, b1 = s2.marking["a1"], s2.marking["b1"]
    assert dehn_twist(s2, a1, b1, 0) == b1
    assert dehn_twist(s2, a1, a1, 5) == a1
    assert dehn_twist(s2, a1, dehn_twist(s2, a1, b1, 1), -1) == b1


def test_cut_along_examples(s2):
    a1, a2 = s2.marking["a1"], s2.marking["a2"]
    sep = separating_curve(s2)
    assert cut_along(s2, a1) == [(1, 2)]
    assert cut_along(s2, sep) == [(1, 1), (1, 1)]
    pants = multicurve_union(s2, [a1, a2, sep])
    assert cut_along(s2, pants) == [(0, 3), (0, 3)]


def test_cut_along_euler_conservation(s2, s3):
    for s in (s2, s3):
        a1 = s.marking["a1"]
        sep = separating_curve(s)
        for m in (a1, sep, multicurve_union(s, [a1, s.marking["a2"]])):
            pieces = cut_along(s, m)
            assert sum(2 - 2 * h - b for (h, b) in pieces) == 2 - 2 * s.genus


def test_is_separating(s2):
    assert not is_separating(s2, s2.marking["a1"])
    assert not is_separating(s2, s2.marking["b2"])
    sep = separating_curve(s2)
    assert is_separating(s2, sep)
    assert homology_class(s2, sep) == (0, 0, 0, 0)


def test_curve_word_examples(s2):
    a1, b1 = s2.marking["a1"], s2.marking["b1"]
    assert curve_word(s2, a1) == CyclicWord([1])
    sep = separating_curve(s2)
    assert curve_word(s2, sep) == CyclicWord([1, 2, -1, -2])
    # DERIVED: the twist image is a1 b1 up to the stated equivalences;
    # verified through its homology class and intersection numbers
    tw = dehn_twist(s2, b1, a1, 1)
    assert curve_word(s2, tw) == CyclicWord([1, 2])
    assert homology_class(s2, tw) == (1, 1, 0, 0)
    assert geometric_intersection(s2, tw, a1) == 1
    assert geometric_intersection(s2, tw, b1) == 1


def test_homology_examples(s2):
    assert homology_class(s2, s2.marking["a1"]) == (1, 0, 0, 0)
    assert homology_class(s2, separating_curve(s2)) == (0, 0, 0, 0)
    tw = dehn_twist(s2, s2.marking["b1"], s2.marking["a1"], 1)
    assert homology_class(s2, tw) == (1, 1, 0, 0)


def test_homology_matches_word_abelianization(s2):
    # independent oracle: recompute exponent sums directly from curve_word
    curves = [s2.marking["a1"], s2.marking["b2"], separating_curve(s2)]
    curves.append(dehn_twist(s2, s2.marking["b1"], s2.marking["a1"], 2))
    for c in curves:
        vec = [0] * (2 * s2.genus)
        for x in curve_word(s2, c):
            vec[abs(x) - 1] += 1 if x > 0 else -1
        assert tuple(vec) == homology_class(s2, c)


def test_intersection_symmetry_random(s2):
    import random

    rng = random.Random(1234)
    pool = list(s2.marking.values()) + [separating_curve(s2)]

    def rand_curve():
        c = rng.choice(pool)
        for _ in range(rng.randint(0, 3)):
            c = dehn_twist(s2, rng.choice(pool), c, rng.choice([-2, -1, 1, 2]))
        return c

    for _ in range(40):
        c, d = rand_curve(), rand_curve()
        assert geometric_intersection(s2, c, d) == geometric_intersection(s2, d, c)


def test_json_roundtrip(s2):
    a1 = s2.marking["a1"]
    data = a1.to_json()
    assert data == {"genus": 2, "weights": list(a1.weights)}
    back = NormalMulticurve.from_json(data)
    assert back == a1

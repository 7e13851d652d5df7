import numpy as np
import pytest

from zdbkit.designs import PdsParams, cyclotomic_pds, image_pds, pcp_pds
from zdbkit.errors import NotRegularSet, ParseError, Timeout
from zdbkit.funcspace import PolyFn, evaluate
from zdbkit.graphs import (
    CayleyGraph,
    automorphism_order,
    cayley_graph,
    fingerprint,
    graph_to_text,
    is_isomorphic,
    parse_graph_text,
    rank2,
    relabel,
    srg_eigen_data,
    translations,
    verify_srg,
)


def petersen() -> CayleyGraph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7),
             (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    rows = [0] * 10
    for u, w in edges:
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    return CayleyGraph(rows)


def rook_4x4() -> CayleyGraph:
    rows = [0] * 16
    for i in range(16):
        for j in range(16):
            if i != j and (i // 4 == j // 4 or i % 4 == j % 4):
                rows[i] |= 1 << j
    return CayleyGraph(rows)


def shrikhande() -> CayleyGraph:
    deltas = {(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)}
    rows = [0] * 16
    for i in range(16):
        for j in range(16):
            if i != j and ((i % 4 - j % 4) % 4, (i // 4 - j // 4) % 4) in deltas:
                rows[i] |= 1 << j
    return CayleyGraph(rows)


def test_cayley_k4(f256):
    from zdbkit.gf import get_field
    f4 = get_field("f4")
    k4 = cayley_graph(f4, [1, 2, 3])
    ok, _ = verify_srg(k4, PdsParams(4, 3, 2, None))
    assert ok
    assert rank2(k4) == 4


def test_cayley_from_catalog(f256):
    D = image_pds(evaluate(PolyFn(f256, ((3, 1),))))
    g = cayley_graph(f256, D)
    assert g.v == 256 and g.degree(0) == 85
    assert g.vertex_transitive
    ok, _ = verify_srg(g, PdsParams(256, 85, 24, 30))
    assert ok
    assert rank2(g) == 256


def test_cayley_row0_support_is_connection_set(f256):
    D = image_pds(evaluate(PolyFn(f256, ((3, 1),))))
    g = cayley_graph(f256, D)
    support = [w for w in range(256) if (g.rows[0] >> w) & 1]
    assert support == sorted(D)


def test_cayley_requires_symmetric_set(f9):
    with pytest.raises(NotRegularSet):
        cayley_graph(f9, [1])  # -1 != 1 in odd characteristic


def test_rank2_cases():
    assert rank2(CayleyGraph([0, 0, 0])) == 0
    rows = [0b1110, 0b1101, 0b1011, 0b0111]
    assert rank2(CayleyGraph(rows)) == 4  # K4: I+J invertible for v=4


def test_rank2_invariant_under_relabeling():
    g = petersen()
    base = rank2(g)
    rng = np.random.default_rng(2)
    for _ in range(3):
        assert rank2(relabel(g, list(rng.permutation(10)))) == base


def test_srg_violation_witness():
    ok, wit = verify_srg(petersen(), PdsParams(10, 3, 0, 2))
    assert not ok and wit is not None


def test_fingerprint_invariance_and_determinism():
    g = petersen()
    fp = fingerprint(g)
    rng = np.random.default_rng(4)
    for _ in range(3):
        h = relabel(g, list(rng.permutation(10)))
        assert fingerprint(h) == fp
    assert fingerprint(petersen()) == fp
    assert fingerprint(rook_4x4()) != fingerprint(shrikhande())


def test_isomorphism_with_recovered_mapping():
    g = petersen()
    rng = np.random.default_rng(7)
    perm = list(rng.permutation(10))
    h = relabel(g, perm)
    found, mapping = is_isomorphic(g, h, timeout=60)
    assert found
    for u in range(10):
        for w in range(10):
            assert g.has_edge(u, w) == h.has_edge(mapping[u], mapping[w])


def test_same_parameters_non_isomorphic():
    found, mapping = is_isomorphic(rook_4x4(), shrikhande(), timeout=120)
    assert not found and mapping is None


def test_is_isomorphic_equivalence_small():
    gs = [petersen(), rook_4x4(), shrikhande()]
    for g in gs:
        assert is_isomorphic(g, g, timeout=60)[0]
    found_rs = is_isomorphic(rook_4x4(), shrikhande(), timeout=60)[0]
    found_sr = is_isomorphic(shrikhande(), rook_4x4(), timeout=60)[0]
    assert found_rs == found_sr


def test_timeout_raises():
    from zdbkit.gf import get_field
    f256 = get_field("f256_paper")
    D = image_pds(evaluate(PolyFn(f256, ((3, 1),))))
    g = cayley_graph(f256, D)
    h = relabel(g, list(np.random.default_rng(0).permutation(256)))
    with pytest.raises(Timeout):
        is_isomorphic(g, h, timeout=1e-9)


def test_automorphism_orders_known_graphs():
    assert automorphism_order(petersen(), timeout=60).order == 120
    rows = [0] * 5
    for i in range(5):
        rows[i] |= 1 << ((i + 1) % 5)
        rows[(i + 1) % 5] |= 1 << i
    assert automorphism_order(CayleyGraph(rows), timeout=60).order == 10
    assert automorphism_order(rook_4x4(), timeout=120).order == 1152
    # Clebsch graph via the square-class construction: |Aut| = 1920
    from zdbkit.gf import get_field
    f16 = get_field("f16")
    D, params = cyclotomic_pds(f16, 2, [0])
    cleb = cayley_graph(f16, D)
    info = automorphism_order(cleb, timeout=120,
                              known_automorphisms=translations(f16))
    assert info.order == 1920
    assert info.order % 16 == 0  # translation subgroup divides
    for gen in info.generators:
        h = relabel(cleb, list(gen))
        assert h.rows == cleb.rows  # generators verified as automorphisms


def test_eigen_data():
    r, s, m1, m2 = srg_eigen_data(PdsParams(256, 85, 24, 30))
    assert (r, s, m1, m2) == (5, -11, 170, 85)
    r, s, m1, m2 = srg_eigen_data(PdsParams(81, 20, 1, 6))
    assert (r, s) == (2, -7)
    assert 20 + m1 * r + m2 * s == 0
    r, s, m1, m2 = srg_eigen_data(PdsParams(16, 5, 0, 2))
    assert (r, s, m1, m2) == (1, -3, 10, 5)


def test_graph_text_round_trip():
    g = petersen()
    assert parse_graph_text(graph_to_text(g)).rows == g.rows
    with pytest.raises(ParseError):
        parse_graph_text("not a graph")
    with pytest.raises(ParseError):
        parse_graph_text("v=2\n0\n")  # missing a row


def test_graph_validation():
    with pytest.raises(ParseError):
        CayleyGraph([0b10, 0b00])  # asymmetric
    with pytest.raises(ParseError):
        CayleyGraph([0b01, 0b10])  # self loop

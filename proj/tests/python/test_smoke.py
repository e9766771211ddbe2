import os

import pytest

import sympdeg as sd

M_EX = sd.Representation(5, {(1, 4): 1, (2, 5): 1, (3, 3): 2})


def test_ranks_round_trip():
    r = sd.ranks_of(M_EX)
    assert r.rows() == [[1, 1, 1, 1, 0], [2, 2, 2, 1], [4, 2, 1], [2, 1], [1]]
    assert sd.rep_of(r) == M_EX
    assert sd.dual(M_EX) == M_EX


def test_hom_ext_euler():
    a = sd.Representation(3, {(1, 2): 1})
    b = sd.Representation(3, {(2, 3): 1})
    assert sd.ext_dim(a, b) == 1
    assert sd.ext_dim(b, a) == 0
    assert sd.euler_form(sd.dim_vector(a), sd.dim_vector(b)) == sd.hom_dim(a, b) - sd.ext_dim(a, b)


def test_errors_carry_their_name():
    with pytest.raises(sd.SympdegError, match="InvalidSegment"):
        sd.Representation(3, {(2, 1): 1})
    with pytest.raises(sd.SympdegError, match="InvalidRankSequence"):
        sd.rep_of(sd.RankSequence.from_rows([[1, 2], [1]]))


def test_golden_ex1_path():
    sym = sd.SymmetricType(5, -1)
    m = sd.Representation(5, {(1, 5): 6})
    n = sd.rep_of(sd.RankSequence.from_rows([[6, 5, 4, 3, 2], [6, 5, 4, 3], [6, 5, 4], [6, 5], [6]]))
    assert sd.sym_degenerates(m, n, sym)
    path = sd.sym_degeneration_path(m, n, sym)
    peels = [(s["L"]["i"], s["L"]["j"]) for s in path if s.get("L")]
    assert peels == [(5, 5), (4, 5), (3, 5)]


def test_generic_quotient_moves():
    m = sd.Representation(8, {(1, 8): 1, (2, 7): 1, (3, 6): 1, (4, 5): 1})
    rep = sd.generic_quotient(m, 5, 8)
    assert len(rep["moves"]) == 4


def test_pbw():
    half, total = sd.build_Mi(3, [1])
    assert sd.dim_vector(total) == [6, 6, 6, 6, 6]
    assert sd.w_i_word(3, [1]) == [4, 3, 4, 2, 3, 4, 1]
    assert sd.is_reduced("C", 4, sd.w_i_word(3, [1]))
    assert [sd.lagrangian_fixed_point_count(n, []) for n in (1, 2, 3)] == [2, 8, 48]
    assert sd.dynkin_face_contains_zero(4, [1, 3])
    report = sd.check_lemma_ui(3, [1])
    assert len(report["rows"]) == 6

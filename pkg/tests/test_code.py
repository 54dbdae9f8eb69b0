from __future__ import annotations

import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from leebounds.code import (
    EnumerationCapError,
    Isometry,
    LinearCode,
    ZeroCodeError,
    _check_systematic,
    apply_isometry,
    code_size_from_subtype,
    code_to_dict,
    codeword_array,
    codeword_set,
    dump_code,
    enumerate_codewords,
    filtration_subcode,
    information_sets,
    iter_codeword_chunks,
    load_code,
    reduced_systematic_form,
    socle,
    systematic_form,
    torsion_code,
)
from leebounds.ring import Modulus

import oracles
from conftest import load
from strategies import codes, generator_matrices, isometries

Z9, Z27, Z5 = Modulus(3, 2), Modulus(3, 3), Modulus(5, 1)


def words_of(G, q):
    return oracles.span([tuple(r) for r in np.asarray(G).tolist()], q)


def test_systematic_form_keeps_systematic_input():
    G = [[1, 0, 3, 2], [0, 1, 2, 0], [0, 0, 3, 3]]
    form = systematic_form(G, Z9)
    assert form.matrix.tolist() == G
    assert form.subtype == (2, 1)
    assert form.permutation == (0, 1, 2, 3)


def test_systematic_form_scales_units():
    form = systematic_form([[2, 4]], Z5)
    assert form.matrix.tolist() == [[1, 2]]
    assert form.subtype == (1,)


def test_systematic_form_reorders_blocks():
    form = systematic_form([[3, 0], [0, 1]], Z9)
    assert form.matrix.tolist() == [[1, 0], [0, 3]]
    assert form.permutation == (1, 0)
    assert form.subtype == (1, 1)
    # the permuted input and the output span the same code
    permuted = np.array([[3, 0], [0, 1]])[:, list(form.permutation)]
    assert words_of(permuted, 9) == words_of(form.matrix, 9)


def test_systematic_form_zero():
    with pytest.raises(ZeroCodeError, match="zero code"):
        systematic_form([[0, 0], [0, 0]], Z9)


def test_reduced_systematic_form_example():
    G = [[1, 14, 11, 0], [0, 9, 18, 0], [0, 0, 9, 18]]
    R = reduced_systematic_form(G, Z27)
    assert R.tolist() == [[1, 23, 2, 0], [0, 9, 0, 18], [0, 0, 9, 18]]
    assert words_of(R, 27) == words_of(G, 27)
    # entries above a p^2 pivot have Lee weight at most 9
    for c in (1, 2):
        assert all(oracles.lee(R[i][c], 27) <= 9 for i in range(c))


def test_reduced_systematic_form_idempotent_and_small_case():
    R = reduced_systematic_form([[1, 8], [0, 3]], Z9)
    assert R.tolist() == [[1, 8], [0, 3]]
    assert reduced_systematic_form(R, Z9).tolist() == R.tolist()


def test_reduced_systematic_form_rejects_non_systematic():
    with pytest.raises(ValueError):
        reduced_systematic_form([[3, 1], [0, 1]], Z9)
    with pytest.raises(ValueError):
        _check_systematic(np.array([[0, 1]]), Z9)


def test_linear_code_parameters():
    C = load("join_z9")
    assert (C.K, C.size, C.sigma) == (3, 243, 1)
    assert C.k == Fraction(5, 2)
    assert C.support_subtype == (4, 0, 0)
    assert not C.is_free and not C.is_degenerate
    assert load("puncturing_z9").support_subtype == (2, 2, 0)


def test_support_subtype_with_zero_column():
    C = LinearCode.from_generators([[1, 0, 3, 2, 0], [0, 1, 2, 0, 0], [0, 0, 3, 3, 0]], Z9)
    assert C.support_subtype == (4, 0, 1)
    assert C.is_degenerate


def test_enumeration_counts():
    assert len(list(enumerate_codewords(load("shiromoto_z5")))) == 5
    assert len(codeword_set(load("join_z9"))) == 243
    zero = LinearCode.zero(Z9, 3)
    assert list(enumerate_codewords(zero)) == [(0, 0, 0)]


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError, match="243"):
        codeword_array(load("join_z9"), cap=100)


def test_enumeration_chunks_partition():
    C = load("join_z9")
    parts = [c for lo in range(0, 243, 50)
             for c in iter_codeword_chunks(C, start=lo, stop=lo + 50, chunk_size=7)]
    rows = [tuple(r) for chunk in parts for r in chunk.tolist()]
    assert len(rows) == 243 and set(rows) == codeword_set(C)


def test_filtration_subcode_example():
    C = load("profile_z27")
    C1 = filtration_subcode(C, 1)
    C2 = filtration_subcode(C, 2)
    assert codeword_set(C1) == words_of([[3, 0, 0, 9, 18], [0, 3, 0, 3, 21], [0, 0, 3, 0, 24]], 27)
    assert codeword_set(C2) == words_of([[9, 0, 0, 0, 0], [0, 9, 0, 9, 9], [0, 0, 9, 0, 18]], 27)
    assert filtration_subcode(C, 0) is C
    assert C1.K == C2.K == C.K
    with pytest.raises(ValueError):
        filtration_subcode(C, 3)


def test_socle():
    C = load("join_z9")
    S = socle(C)
    assert S.subtype == (0, 3) and S.K == 3
    assert codeword_set(S) == oracles.filtration_subcode(codeword_set(C), 1, 3)
    Z3 = LinearCode.from_generators([[1, 2]], Modulus(3, 1))
    assert codeword_set(socle(Z3)) == codeword_set(Z3)
    T = LinearCode.from_generators([[3]], Z9)
    assert codeword_set(socle(T)) == codeword_set(T)


def test_torsion_code_example():
    C = load("join_z9")
    T = torsion_code(C, 1)
    assert T.modulus == Modulus(3, 1)
    assert codeword_set(T) == words_of([[1, 0, 0, 2], [0, 1, 2, 0]], 3)
    assert T.K == 2 == C.subtype[0]
    assert torsion_code(C, 0) is C
    with pytest.raises(ValueError):
        torsion_code(C, 2)


def test_isometry_examples():
    C = load("join_z9")
    assert codeword_set(apply_isometry(C, Isometry.identity(4))) == codeword_set(C)
    neg = apply_isometry(C, Isometry(tuple(range(4)), (-1,) * 4))
    assert codeword_set(neg) == codeword_set(C)
    swapped = apply_isometry(C, Isometry((1, 0, 2, 3), (1, 1, 1, 1)))
    assert swapped.support_subtype == (4, 0, 0)
    with pytest.raises(ValueError):
        apply_isometry(C, Isometry.identity(3))
    with pytest.raises(ValueError):
        Isometry((0, 0), (1, 1))
    with pytest.raises(ValueError):
        Isometry((0, 1), (1, 2))


def test_information_sets():
    C = load("example1_z9")
    assert information_sets(C) == [(0, 1, 2), (0, 1, 3), (1, 2, 3)]
    words = codeword_set(C)
    for S in information_sets(C):
        assert len({tuple(w[j] for j in S) for w in words}) == len(words)


def test_file_round_trip(tmp_path):
    C = load("example2_z27")
    path = tmp_path / "c.json"
    dump_code(C, path)
    D = load_code(path)
    assert codeword_set(D) == codeword_set(C)
    assert json.loads(path.read_text()) == code_to_dict(C)


def test_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ValueError, match="invalid JSON"):
        load_code(bad)
    bad.write_text(json.dumps({"p": 3, "s": 2, "n": 3, "generators": [[1, 2]]}))
    with pytest.raises(ValueError, match="length"):
        load_code(bad)
    bad.write_text(json.dumps({"p": 3, "s": 2}))
    with pytest.raises(ValueError, match="malformed"):
        load_code(bad)
    with pytest.raises(OSError):
        load_code(tmp_path / "missing.json")


def test_zero_code_file(data_dir):
    with pytest.raises(ZeroCodeError, match="zero code"):
        load_code(data_dir / "zero_z9.json")
    assert load_code(data_dir / "zero_z9.json", allow_zero=True).is_zero


# properties -----------------------------------------------------------------


@given(generator_matrices())
def test_systematic_form_preserves_span(mG):
    m, G = mG
    form = systematic_form(G, m)
    permuted = G[:, list(form.permutation)]
    assert words_of(permuted, m.q) == words_of(form.matrix, m.q)
    _check_systematic(form.matrix, m)


@given(codes())
def test_size_from_subtype_matches_enumeration(C):
    words = oracles.span([tuple(r) for r in C.generator.tolist()], C.q)
    assert code_size_from_subtype(C.modulus, C.subtype) == C.size == len(words)
    assert len(codeword_set(C)) == len(words)
    assert 0 <= C.subtype[0] <= C.k <= C.K <= C.n
    assert sum(C.support_subtype) == C.n
    assert C.support_subtype == oracles.support_subtype(words, C.p, C.s)


@given(codes())
def test_reduced_form_cap_and_span(C):
    R = reduced_systematic_form(C.sys_matrix, C.modulus)
    assert words_of(R, C.q) == words_of(C.sys_matrix, C.q)
    for c, v in enumerate(C.pivot_valuations):
        for i in range(c):
            assert oracles.lee(int(R[i, c]), C.q) <= C.p**v
    assert reduced_systematic_form(R, C.modulus).tolist() == R.tolist()


@given(codes())
def test_filtration_block_rule_matches_membership(C):
    words = codeword_set(C)
    previous = words
    for i in range(C.s):
        sub = codeword_set(filtration_subcode(C, i))
        assert sub == oracles.filtration_subcode(words, i, C.p)
        assert sub <= previous
        previous = sub


@given(codes())
def test_torsion_code_matches_reduction(C):
    words = codeword_set(C)
    for i in range(C.s):
        T = torsion_code(C, i)
        assert codeword_set(T) == oracles.torsion_words(words, i, C.p, C.s)
        assert T.K == sum(C.subtype[: C.s - i])
        scaled = {tuple((C.p**i * a) % C.q for a in w) for w in codeword_set(T)}
        assert scaled <= oracles.filtration_subcode(words, i, C.p)


@given(codes(), st.data())
def test_isometry_preserves_code_structure(C, data):
    perm, signs = data.draw(isometries(C.n))
    D = apply_isometry(C, Isometry(perm, signs))
    assert codeword_set(D) == oracles.isometry_image(codeword_set(C), perm, signs, C.q)
    assert D.support_subtype == C.support_subtype
    assert D.subtype == C.subtype

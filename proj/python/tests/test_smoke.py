import pytest

import ordwork


def test_chain_codes():
    codes = ordwork.encode_order([0, 1, 2], [(2, 1), (1, 0)])
    assert codes == {0: [1], 1: [0, 1], 2: [0, 0, 1]}


def test_tie_break_policies():
    lt = [(2, 0), (3, 0), (3, 1), (3, 2)]
    assert ordwork.encode_order([0, 1, 2, 3], lt)[3] == [0, 0, 1]
    assert ordwork.encode_order([0, 1, 2, 3], lt, tie="smallest")[3] == [2, 1]
    with pytest.raises(ordwork.OrdworkError, match="AmbiguousLeast"):
        ordwork.encode_order([0, 1, 2, 3], lt, tie="strict")


def test_code_roundtrip():
    coded = ordwork.encode_seq([0, 1, 2], [(2, 1), (1, 0)], [0, 1])
    assert coded == [1, 0, 0, 1, 1]
    assert ordwork.decode_path([0, 1, 2], [(2, 1), (1, 0)], coded) == [0, 1]


def test_cycle_rejected():
    with pytest.raises(ordwork.OrdworkError, match="CycleError"):
        ordwork.seq_less([0, 1], [(0, 1), (1, 0)], [0], [1])


def test_embeddings():
    assert ordwork.higman_leq([0, 1], [1, 0, 1], [0, 1], [])
    assert not ordwork.higman_leq([0, 0], [0, 1], [0, 1], [])
    assert ordwork.is_bad([3, 2, 1], [0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)]) is None
    assert ordwork.is_bad([3, 1, 2], [0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)]) == (1, 2)
    assert ordwork.ktree_leq([-1, 0], [0, 0], [-1, 0, 0], [0, 0, 0], [0], [])
    assert not ordwork.ktree_leq([-1, 0, 0], [0, 0, 0], [-1, 0], [0, 0], [0], [])


def test_barriers():
    assert ordwork.block_tri([0, 2], [2, 5])
    assert not ordwork.block_tri([0, 2], [3, 5])
    assert ordwork.star_fragment(3, [[0], [1], [2]]) == [[0, 1], [0, 2], [1, 2]]


def test_paths():
    delta = [(0, 0, 0), (0, 1, 0)]
    assert ordwork.leftmost_path(2, 1, 0, delta) == ([], [0])
    assert ordwork.minimal_path(2, 1, 0, delta, [(1, 0)]) == ([], [1])
    with pytest.raises(ordwork.OrdworkError, match="WellFounded"):
        ordwork.leftmost_path(1, 1, 0, [])


def test_menger():
    assert ordwork.menger_solve(2, [(0, 1)], [0], [1]) == ([[0, 1]], [0])
    paths, cut = ordwork.menger_solve(4, [(0, 2), (0, 3), (1, 2), (1, 3)], [0, 1], [2, 3])
    assert len(paths) == len(cut) == 2


def test_wave_roundtrip():
    graph = (4, [(0, 1), (1, 2), (2, 3), (3, 0)], [0], [2])
    wave = ordwork.maximal_wave(*graph)
    assert wave == [[0, 3, 2]]
    seq = ordwork.encode_wave(*graph, wave)
    assert ordwork.decode_wave(*graph, seq) == wave
    with pytest.raises(ordwork.OrdworkError, match="NotAWave"):
        ordwork.encode_wave(*graph, [[0, 1]])

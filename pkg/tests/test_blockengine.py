import pytest

from rouquier import blockengine as be
from rouquier.blockengine import (
    NoVectorFound,
    OffAll,
    OnExactly,
    Partition,
    PrimeDoesNotDivideOrder,
    SizeMismatch,
    all_blocks,
    blocks_no_hyperplane,
    blocks_on_hyperplane,
    essential_hyperplanes,
    find_spec_vectors,
    format_hyperplane,
    join,
    meet,
    rouquier_blocks,
)
from rouquier.grouprepo import p_blocks_of_group
from rouquier.monlattice import dot
from rouquier.numfield import primes_above

G4_HYPS = [(0, 1, -1), (1, -1, 0), (1, 0, -1), (2, -1, -1), (1, -2, 1), (1, 1, -2)]


def P(n):
    return Partition.from_list(n)


def test_partition_canonical_form():
    a = Partition([[3, 1], [0], [2]])
    assert a.to_list() == [[1], [2, 4], [3]]
    assert a == Partition.from_list([[3], [4, 2], [1]])
    with pytest.raises(ValueError):
        Partition([[0, 1], [1]])


def test_join_example():
    a = P([[1, 2, 3], [4], [5], [6], [7]])
    b = P([[1, 4, 5, 6], [2], [3], [7]])
    assert join(a, b).to_list() == [[1, 2, 3, 4, 5, 6], [7]]


def test_meet_example():
    a = P([[1, 2, 3, 4], [5, 6, 7]])
    b = P([[1, 2], [3, 4, 5], [6, 7]])
    assert meet(a, b).to_list() == [[1, 2], [3, 4], [5], [6, 7]]


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        join(Partition.singletons(2), Partition.singletons(3))


def test_coarser():
    fine = P([[1], [2, 3], [4]])
    coarse = P([[1, 2, 3], [4]])
    assert coarse.is_coarser_or_equal(fine)
    assert not fine.is_coarser_or_equal(coarse)


def test_format_hyperplane():
    names = ["c_0", "c_1", "c_2"]
    assert format_hyperplane((1, -2, 1), names) == "c_0-2c_1+c_2=0"
    assert format_hyperplane((0, 1, -1), names) == "c_1-c_2=0"
    assert format_hyperplane((2, -1, -1), names) == "2c_0-c_1-c_2=0"


def test_spec_vectors_on_hyperplane():
    got = list(find_spec_vectors(G4_HYPS, OnExactly((1, -2, 1)), (3,)))
    assert (0, 1, 2) in got
    for n in got:
        assert dot((1, -2, 1), n) == 0
        assert all(dot(h, n) for h in G4_HYPS if h != (1, -2, 1))
    assert (0, 0, 1) in find_spec_vectors(G4_HYPS, OnExactly((1, -1, 0)), (3,))


def test_spec_vectors_off_all():
    got = list(find_spec_vectors(G4_HYPS, OffAll(), (3,), budget=20))
    assert len(got) == 20
    assert len(set(got)) == 20
    for n in got:
        assert all(dot(h, n) for h in G4_HYPS)


def test_spec_vectors_exhausted():
    # (2,-2,0) cuts out the same plane, so nothing is on one and off the other
    with pytest.raises(NoVectorFound):
        list(find_spec_vectors([(1, -1, 0), (2, -2, 0)], OnExactly((1, -1, 0)), (3,), box_cap=3))


def test_essential_hyperplanes_g4(G4):
    assert set(essential_hyperplanes(G4, 0)) == set(G4_HYPS)
    assert set(essential_hyperplanes(G4, 2)) == set(G4_HYPS)
    assert set(essential_hyperplanes(G4, 3)) == {(0, 1, -1), (1, -1, 0), (1, 0, -1)}
    with pytest.raises(PrimeDoesNotDivideOrder) as e:
        essential_hyperplanes(G4, 5)
    assert str(e.value) == "The number p should divide the order of the group"


def test_no_hyperplane_g4(G4):
    assert blocks_no_hyperplane(G4, 5) == Partition.singletons(7)
    joined = be.join_all((blocks_no_hyperplane(G4, p) for p in (2, 3)), 7)
    assert joined == Partition.singletons(7)


def test_on_hyperplane_g4(G4):
    assert blocks_on_hyperplane(G4, 2, (2, -1, -1)).to_list() == [[1, 4, 7], [2], [3], [5], [6]]
    got = be.join(blocks_on_hyperplane(G4, 2, (0, 1, -1)), blocks_on_hyperplane(G4, 3, (0, 1, -1)))
    assert got.to_list() == [[1], [2, 3, 4], [5, 6], [7]]


def test_non_essential_hyperplane_returns_base(G4):
    # (2,-1,-1) is 2-essential only
    assert blocks_on_hyperplane(G4, 3, (2, -1, -1)) == blocks_no_hyperplane(G4, 3)
    assert blocks_on_hyperplane(G4, 2, (1, 2, -3)) == blocks_no_hyperplane(G4, 2)


def test_all_blocks_g4_matches_printed(G4, printed):
    got = [(list(r.hyperplane or []), r.partition.to_list()) for r in all_blocks(G4)]
    assert got == [(c, b) for c, b in printed["G4_all_blocks"]]


@pytest.mark.parametrize("n,blocks", [
    ((0, 1, 2), [[1], [2, 5, 7], [3], [4], [6]]),
    ((0, 0, 0), [[1, 2, 3, 4, 5, 6, 7]]),
    ((0, 2, 4), [[1], [2, 5, 7], [3], [4], [6]]),
    ((0, 1, 1), [[1], [2, 3, 4], [5, 6], [7]]),
    ((0, 1, 3), [[1], [2], [3], [4], [5], [6], [7]]),
])
def test_rouquier_blocks_g4(G4, n, blocks):
    assert rouquier_blocks(G4, n).to_list() == blocks


def test_rouquier_blocks_several_hyperplanes(G4):
    # (1,1,1) lies on all six hyperplanes: join of every record
    assert rouquier_blocks(G4, (1, 1, 1)) == rouquier_blocks(G4, (0, 0, 0))


def test_rouquier_blocks_size_mismatch(G4):
    with pytest.raises(SizeMismatch):
        rouquier_blocks(G4, (0, 1))


def test_linear_a_plus_A_matches_exact(G4):
    for n in [(0, 1, 2), (0, 2, -1), (3, 1, 0), (0, -1, 5)]:
        exact = be.exact_a_plus_A(G4, n)
        for s, val in zip(G4.schur, exact):
            assert val * G4.mu_order == dot(be.linear_a_plus_A(s), n)


def test_blocks_within_p_blocks(G4):
    for p in (2, 3):
        Pp = primes_above(p, 12)[0]
        pb = Partition(p_blocks_of_group(G4, Pp), 7)
        assert pb.is_coarser_or_equal(blocks_no_hyperplane(G4, Pp))
        for h in essential_hyperplanes(G4, p):
            assert pb.is_coarser_or_equal(blocks_on_hyperplane(G4, Pp, h))


def test_budget_exhaustion_leaves_partition_coarser(G4):
    # with a single vector the refinement may stop early but never over-refines
    full = blocks_on_hyperplane(G4, 2, (1, -2, 1))
    tight = blocks_on_hyperplane(G4, 2, (1, -2, 1), budget=1)
    assert tight.is_coarser_or_equal(full)


def test_vectors_used_recorded(G4):
    all_blocks(G4)
    used = be._engine(G4).vectors_used
    assert (2, None) in used and (3, (0, 1, -1)) in used

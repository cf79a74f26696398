import pytest

from funcdigraphs.canon import canonicalize
from funcdigraphs.components import cycle, generate_components
from funcdigraphs.digraphs import generate_digraphs
from funcdigraphs.oracle import classify, enumerate_tables, realize

from reference import COMPONENT_COUNTS, DIGRAPH_COUNTS


def test_enumerate_tables():
    assert len(list(enumerate_tables(1))) == 1
    assert len(list(enumerate_tables(2))) == 4
    tables = list(enumerate_tables(4))
    assert len(tables) == 256
    assert tables[0] == (0, 0, 0, 0)
    assert tables[1] == (0, 0, 0, 1)  # odometer order
    assert tables[-1] == (3, 3, 3, 3)


def test_enumerate_tables_guard():
    with pytest.raises(ValueError):
        list(enumerate_tables(0))
    with pytest.raises(ValueError):
        list(enumerate_tables(9))


def test_classify_small():
    got = classify(4)
    assert len(got.digraphs) == 19
    assert len(got.components) == 9
    assert classify(1) == ({(((1,),),)}, {((1,),)})


def test_classify_matches_generators_up_to_6():
    for n in range(1, 7):
        got = classify(n)
        assert len(got.digraphs) == DIGRAPH_COUNTS[n - 1]
        assert len(got.components) == COMPONENT_COUNTS[n - 1]
        assert got.digraphs == set(generate_digraphs(n))
        assert got.components == set(generate_components(n))


def test_realize_examples():
    assert realize(((((1,),),))) == (0,)
    assert realize((cycle(3),)) == (1, 2, 0)
    assert realize((((4, 1, 1, 1),),)) == (0, 0, 0, 0)


def test_realize_round_trip():
    for n in range(1, 7):
        for g in generate_digraphs(n):
            f = realize(g)
            assert len(f) == n
            assert canonicalize(f) == g

import random
from math import comb

import pytest

from connfunc.adversary import (
    AdversaryTranscript,
    adversary_matroidal,
    adversary_nonmatroidal,
    matroidal_threshold,
    nonmatroidal_threshold,
    parse_queries,
    v_partition,
)
from connfunc.core import ConnFuncError, DomainError
from connfunc.hypercube import buffered_path, x_count
from connfunc.spikes import spike_ground, word_to_mask


def tmask(w, m):
    return word_to_mask(w, 2 * m)


class TestPartition:
    def test_sizes(self):
        lt, eq, gt = v_partition(2)
        assert len(eq) == 6 == comb(4, 2)
        assert len(lt) == len(gt) == 5

    @pytest.mark.parametrize("m", range(1, 6))
    def test_partition(self, m):
        parts = v_partition(m)
        assert sum(map(len, parts)) == 2 ** (2 * m)
        assert all(x_count(w, 2 * m) > m for w in parts[2])
        # all-x picks x on every leg, so it has the most x's
        assert 0 in parts[2]

    def test_bad_m(self):
        with pytest.raises(DomainError):
            v_partition(0)


def test_thresholds():
    assert [matroidal_threshold(m) for m in range(1, 6)] == [1, 3, 10, 35, 126]
    assert [nonmatroidal_threshold(m) for m in range(1, 6)] == [1, 2, 3, 6, 11]


class TestMatroidal:
    def test_two_queries(self):
        eq = v_partition(2)[1]
        t = adversary_matroidal(2, [tmask(eq[0], 2), tmask(eq[1], 2)])
        assert t.fooled and t.agreement_certified
        assert [v.matroidal for v in t.verdicts] == [True, False]

    def test_all_middle_layer(self):
        t = adversary_matroidal(2, [tmask(w, 2) for w in v_partition(2)[1]])
        assert not t.fooled and t.alternative_table is None

    def test_no_queries(self):
        assert adversary_matroidal(2, []).fooled


class TestNonmatroidal:
    def test_examples(self):
        t = adversary_nonmatroidal(2, [tmask(0, 2)])
        assert t.fooled and [v.matroidal for v in t.verdicts] == [False, True]
        assert adversary_nonmatroidal(3, [tmask(0, 3), tmask(1, 3)]).fooled

    def test_covering_all_pairs(self):
        p = buffered_path(2)
        t = adversary_nonmatroidal(2, [tmask(w, 2) for w in p.path[:-1]])
        assert not t.fooled


def test_inert_queries():
    t = adversary_matroidal(2, [0b11, tmask(0b0101, 2)])
    assert t.inert == (True, False)
    assert t.fooled


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("kind", ["matroidal", "nonmatroidal"])
def test_below_threshold_always_fooled(m, kind):
    rng = random.Random(m)
    run = adversary_matroidal if kind == "matroidal" else adversary_nonmatroidal
    limit = matroidal_threshold(m) if kind == "matroidal" else nonmatroidal_threshold(m)
    n = 2 * m
    for _ in range(40):
        size = rng.randrange(int(-(-limit // 1)))
        qs = [rng.randrange(1 << 2 * n) for _ in range(size)]
        t = run(m, qs)
        assert t.fooled
        assert all(t.base_table.value(q) == t.alternative_table.value(q) for q in qs)


def test_json_round_trip():
    t = adversary_nonmatroidal(3, [tmask(5, 3), 0b11])
    back = AdversaryTranscript.from_json(t.to_json())
    assert back == t and back.fooled == t.fooled


def test_parse_queries():
    assert parse_queries({"queries": [["x1", "y1"], "0x55"]}, 2) == [0b11, 0x55]
    assert parse_queries([["x1", "y2"]], 2) == [spike_ground(4).mask(["x1", "y2"])]
    with pytest.raises(ConnFuncError):
        parse_queries("nope", 2)

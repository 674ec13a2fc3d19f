import pytest

from braidedthompson import (BraidWord, Permutation, braid_equal, cable,
                             delete_strands, half_twist, invert, is_cyclic,
                             is_pure, is_trivial, permutation_of,
                             word_from_permutation)
from conftest import seeded


def test_permutation_of_identity():
    assert permutation_of(BraidWord(3)).is_identity()


def test_permutation_of_single_crossing():
    assert permutation_of(BraidWord(2, [1])).image == (2, 1)


def test_permutation_of_traced_word():
    # frozen from the position-tracing oracle: strand 1 ends at 3, etc.
    assert permutation_of(BraidWord(3, [1, 2])).image == (3, 1, 2)


def test_permutation_composition():
    rng = seeded("perm-comp")
    for _ in range(100):
        n = rng.randint(2, 6)
        w1 = BraidWord(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                           for _ in range(rng.randint(0, 6))])
        w2 = BraidWord(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                           for _ in range(rng.randint(0, 6))])
        assert permutation_of(w1 * w2) == permutation_of(w1) * permutation_of(w2)


def test_braid_equal_free_cancellation():
    assert braid_equal(BraidWord(2, [1, -1]), BraidWord(2))


def test_braid_equal_braid_relation():
    assert braid_equal(BraidWord(3, [1, 2, 1]), BraidWord(3, [2, 1, 2]))


def test_braid_equal_exponent_sum_obstruction():
    assert not braid_equal(BraidWord(2, [1, 1]), BraidWord(2))


def test_braid_equal_far_commutation():
    assert braid_equal(BraidWord(4, [1, 3]), BraidWord(4, [3, 1]))


def test_braid_equal_strand_mismatch():
    with pytest.raises(ValueError):
        braid_equal(BraidWord(2), BraidWord(3))


def test_braid_equal_is_invariant_under_rewrites():
    # insertion of i -i, the braid relation, far commutation: 200 cases per n
    rng = seeded("rewrites")
    for n in range(2, 7):
        for _ in range(200):
            letters = [rng.choice([1, -1]) * rng.randint(1, n - 1)
                       for _ in range(rng.randint(0, 8))]
            w = BraidWord(n, letters)
            ls = list(letters)
            for _ in range(3):
                pos = rng.randint(0, len(ls))
                op = rng.randint(0, 2)
                if op == 0:
                    i = rng.randint(1, n - 1)
                    ls[pos:pos] = [i, -i]
                elif op == 1 and n >= 3:
                    i = rng.randint(1, n - 2)
                    ls[pos:pos] = [i, i + 1, i, -i, -(i + 1), -i]
                elif op == 2 and n >= 4:
                    i = rng.randint(1, n - 3)
                    j = rng.randint(i + 2, n - 1)
                    ls[pos:pos] = [i, j, -i, -j]
            w2 = BraidWord(n, ls)
            assert braid_equal(w, w2)
            assert w.exponent_sum() == w2.exponent_sum()


def test_invert_trivial_cases():
    assert str(invert(BraidWord(2))) == ""
    assert str(invert(BraidWord(2, [1]))) == "-1"


def test_invert_product_is_trivial():
    w = BraidWord(3, [1, -2, 1])
    assert str(invert(w)) == "-1 2 -1"
    assert is_trivial(w * invert(w))
    rng = seeded("invert")
    for _ in range(100):
        n = rng.randint(1, 6)
        w = BraidWord(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                          for _ in range(rng.randint(0, 8))] if n > 1 else [])
        assert is_trivial(w * invert(w))
        assert is_trivial(invert(w) * w)


def test_half_twist_words():
    assert str(half_twist(2)) == "1"
    assert str(half_twist(3)) == "1 2 1"
    with pytest.raises(ValueError):
        half_twist(1)


def test_half_twist_square_is_central():
    for d in range(2, 6):
        sq = half_twist(d) * half_twist(d)
        for i in range(1, d):
            s = BraidWord(d, [i])
            assert braid_equal(sq * s, s * sq)


def test_cable_trivial_cases():
    assert cable(BraidWord(1), [3]) == BraidWord(3)
    assert cable(BraidWord(2, [1]), [1, 1]) == BraidWord(2, [1])
    with pytest.raises(ValueError):
        cable(BraidWord(2, [1]), [1])


def test_cable_width_two_block():
    c = cable(BraidWord(2, [1]), [2, 1])
    p = permutation_of(c)
    assert (p(1), p(2), p(3)) == (2, 3, 1)
    assert braid_equal(delete_strands(c, {2}), BraidWord(2, [1]))


def _block_expanded_permutation(p, widths):
    n = p.size
    pinv = p.inverse()
    bot_start = {}
    acc = 1
    for q in range(1, n + 1):
        bot_start[q] = acc
        acc += widths[pinv(q) - 1]
    img = []
    for j in range(1, n + 1):
        img.extend(bot_start[p(j)] + t for t in range(widths[j - 1]))
    return Permutation(img)


def test_cable_delete_roundtrip_and_permutations():
    rng = seeded("cable")
    for _ in range(200):
        n = rng.randint(1, 5)
        letters = [rng.choice([1, -1]) * rng.randint(1, n - 1)
                   for _ in range(rng.randint(0, 8))] if n > 1 else []
        w = BraidWord(n, letters)
        widths = [rng.randint(1, 3) for _ in range(n)]
        c = cable(w, widths)
        starts, acc = [], 1
        for x in widths:
            starts.append(acc)
            acc += x
        kill = set(range(1, sum(widths) + 1)) - set(starts)
        back = delete_strands(c, kill) if kill else c
        assert braid_equal(back, w)
        assert permutation_of(c) == _block_expanded_permutation(permutation_of(w), widths)


def test_cable_of_inverse_cancels():
    rng = seeded("cable-inv")
    for _ in range(100):
        n = rng.randint(2, 4)
        w = BraidWord(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                          for _ in range(rng.randint(0, 5))])
        widths = [rng.randint(1, 3) for _ in range(n)]
        assert is_trivial(cable(w * invert(w), widths))


def test_delete_strands_trivial_cases():
    assert delete_strands(BraidWord(2, [1]), {2}) == BraidWord(1)
    assert delete_strands(BraidWord(2, [1, 1]), {1}) == BraidWord(1)
    assert delete_strands(BraidWord(3, [2, 2]), {3}) == BraidWord(2)
    with pytest.raises(ValueError):
        delete_strands(BraidWord(2, [1]), {1, 2})


def test_purity_and_cyclicity():
    assert is_pure(BraidWord(2)) and is_cyclic(BraidWord(2))
    assert not is_pure(BraidWord(2, [1])) and is_cyclic(BraidWord(2, [1]))
    assert not is_pure(BraidWord(3, [1])) and not is_cyclic(BraidWord(3, [1]))
    assert is_pure(half_twist(3) * half_twist(3))
    assert is_cyclic(BraidWord(3, [1, 2]))


def test_word_from_permutation():
    rng = seeded("perm-braid")
    for _ in range(100):
        n = rng.randint(1, 7)
        img = list(range(1, n + 1))
        rng.shuffle(img)
        p = Permutation(img)
        w = word_from_permutation(p)
        assert permutation_of(w) == p
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if img[i] > img[j])
        assert len(w) == inversions


def test_braid_equal_complete_on_two_strands():
    # B_2 is infinite cyclic, so equality there is exactly equality of
    # exponent sums; braid_equal must match on random word pairs
    rng = seeded("b2-complete")
    for _ in range(300):
        w1 = BraidWord(2, [rng.choice([1, -1]) for _ in range(rng.randint(0, 9))])
        w2 = BraidWord(2, [rng.choice([1, -1]) for _ in range(rng.randint(0, 9))])
        assert braid_equal(w1, w2) == (w1.exponent_sum() == w2.exponent_sum())


def _burau3(w):
    # reduced Burau matrices over Z[t, 1/t] as {exponent: coeff} dicts;
    # faithful on three strands, so exact matrix equality decides braid
    # equality there
    def add(p, q):
        out = dict(p)
        for e, c in q.items():
            out[e] = out.get(e, 0) + c
            if out[e] == 0:
                del out[e]
        return out

    def mulp(p, q):
        out = {}
        for e1, c1 in p.items():
            for e2, c2 in q.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return {e: c for e, c in out.items() if c}

    def matmul(a, b):
        return [[add(mulp(a[i][0], b[0][j]), mulp(a[i][1], b[1][j]))
                 for j in range(2)] for i in range(2)]

    one, zero, t, mt = {0: 1}, {}, {1: 1}, {1: -1}
    tinv, mtinv = {-1: 1}, {-1: -1}
    gens = {
        1: [[mt, one], [zero, one]],
        2: [[one, zero], [t, mt]],
        -1: [[mtinv, tinv], [zero, one]],
        -2: [[one, zero], [one, mtinv]],
    }
    m = [[one, zero], [zero, one]]
    for a in w.letters:
        m = matmul(m, gens[a])
    return m


def test_braid_equal_matches_burau_on_three_strands():
    rng = seeded("burau")
    for _ in range(150):
        w1 = BraidWord(3, [rng.choice([1, -1]) * rng.randint(1, 2)
                           for _ in range(rng.randint(0, 8))])
        if rng.random() < 0.5:
            # engineered equal pair: insert relators
            ls = list(w1.letters)
            for _ in range(2):
                pos = rng.randint(0, len(ls))
                ls[pos:pos] = rng.choice([[1, 2, 1, -1, -2, -1], [2, -2], [-1, 1]])
            w2 = BraidWord(3, ls)
        else:
            w2 = BraidWord(3, [rng.choice([1, -1]) * rng.randint(1, 2)
                               for _ in range(rng.randint(0, 8))])
        assert braid_equal(w1, w2) == (_burau3(w1) == _burau3(w2))


def test_word_serialization():
    w = BraidWord.from_string(4, "1 -2 3")
    assert str(w) == "1 -2 3"
    assert BraidWord.from_string(4, str(w)) == w
    with pytest.raises(ValueError):
        BraidWord.from_string(2, "2")
    with pytest.raises(ValueError):
        BraidWord(2, [0])


def test_word_serialization_with_strand_prefix():
    w = BraidWord.from_string(None, "B4: 1 -2 3")
    assert w.strands == 4 and str(w) == "1 -2 3"
    assert w.to_prefixed_string() == "B4: 1 -2 3"
    assert BraidWord.from_string(4, w.to_prefixed_string()) == w
    with pytest.raises(ValueError):
        BraidWord.from_string(3, "B4: 1")
    with pytest.raises(ValueError):
        BraidWord.from_string(None, "1 2")

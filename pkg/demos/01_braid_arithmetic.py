"""Exact braid arithmetic: words, the decidable word problem, cabling.

Run:  python3 demos/01_braid_arithmetic.py
"""

from braidedthompson import (BraidWord, braid_equal, cable, delete_strands,
                             half_twist, is_pure, permutation_of)

# Words are lists of signed generator indices, composed left to right.
w = BraidWord.from_string(3, "1 -2 1")
print("word:", w, "in B_%d" % w.strands)
print("permutation:", permutation_of(w).image)
print("exponent sum:", w.exponent_sum())

# The word problem is decidable: the two sides of the braid relation are
# different words but the same group element.
lhs, rhs = BraidWord(3, [1, 2, 1]), BraidWord(3, [2, 1, 2])
print("\nbraid relation:", lhs, "==", rhs, "->", braid_equal(lhs, rhs))
print("sigma_1^2 trivial?", braid_equal(BraidWord(2, [1, 1]), BraidWord(2)))

# The half twist Delta_d; its square is central.
for d in (2, 3, 4):
    delta = half_twist(d)
    sq = delta * delta
    central = all(braid_equal(sq * BraidWord(d, [i]), BraidWord(d, [i]) * sq)
                  for i in range(1, d))
    print("Delta_%d = %s, Delta^2 central: %s" % (d, delta, central))

# Cabling replaces strands by parallel bundles; deleting all but one
# strand per bundle undoes it.
w = BraidWord(2, [1])
c = cable(w, [2, 1])
print("\ncable of", w, "with widths (2,1):", c, "in B_%d" % c.strands)
print("permutation of the cable:", permutation_of(c).image)
back = delete_strands(c, {2})
print("deleting strand 2 gives back:", back, "equal:", braid_equal(back, w))
print("cable is pure?", is_pure(c))

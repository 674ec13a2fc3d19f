"""Exact computation in the Artin braid groups B_n.

A braid is stored as a word in the generators sigma_1 .. sigma_{n-1}
(letter i > 0 for sigma_i, i < 0 for its inverse), read left to right,
which is top to bottom in diagrams.  Equality of braids is decided by
the left greedy normal form over permutation braids with a Delta-power
prefix, so `braid_equal` is a complete decision procedure.

Besides the group operations the module provides the geometric moves
needed by the diagram calculus: half twists, cabling (replacing strands
by parallel bundles) and strand deletion (forgetting strands).

Sign convention: a positive letter i means the strand at position i
crosses OVER the strand at position i+1.  Nothing computed here depends
on this choice; it only matters when reading a diagram off a word.
"""

from __future__ import annotations

from collections import deque


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images."""

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(image)
        n = len(image)
        if sorted(image) != list(range(1, n + 1)):
            raise ValueError("not a bijection of 1..%d: %r" % (n, image))
        self.image = image

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @property
    def size(self):
        return len(self.image)

    def __call__(self, i):
        return self.image[i - 1]

    def __mul__(self, other):
        """Left-to-right composition: (p*q)(i) = q(p(i))."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(other.image[x - 1] for x in self.image)

    def inverse(self):
        inv = [0] * self.size
        for i, x in enumerate(self.image):
            inv[x - 1] = i + 1
        return Permutation(inv)

    def is_identity(self):
        return all(x == i + 1 for i, x in enumerate(self.image))

    def is_cyclic(self):
        """True iff i |-> i + k (mod n) for some fixed k."""
        n = self.size
        k = self.image[0] - 1
        return all(self.image[i] == (i + k) % n + 1 for i in range(n))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return "Permutation(%r)" % (self.image,)


class BraidWord:
    """A word in B_n.  Immutable; the normal form is cached lazily.

    `==` compares words letter for letter.  Use `braid_equal` for
    equality as group elements.
    """

    __slots__ = ("strands", "letters", "_nf")

    def __init__(self, strands, letters=()):
        if strands < 1:
            raise ValueError("need at least one strand")
        letters = tuple(letters)
        for a in letters:
            if a == 0 or abs(a) >= strands:
                raise ValueError("letter %d out of range for B_%d" % (a, strands))
        self.strands = strands
        self.letters = letters
        self._nf = None

    @classmethod
    def from_string(cls, strands, text):
        """Parse a whitespace-separated word like "1 -2 3".

        An explicit "B4:" prefix may carry the strand count instead; pass
        strands=None to rely on it.  When both are given they must agree.
        """
        text = text.strip()
        if text.startswith("B"):
            head, sep, rest = text.partition(":")
            if sep and head[1:].isdigit():
                n = int(head[1:])
                if strands is not None and strands != n:
                    raise ValueError("prefix says B_%d but %d strands expected" % (n, strands))
                strands = n
                text = rest
        if strands is None:
            raise ValueError("no strand count: give one or use a B<n>: prefix")
        return cls(strands, [int(p) for p in text.split()])

    def to_prefixed_string(self):
        return "B%d: %s" % (self.strands, self)

    def __str__(self):
        return " ".join(str(a) for a in self.letters)

    def __repr__(self):
        return "BraidWord(%d, %r)" % (self.strands, list(self.letters))

    def __mul__(self, other):
        if self.strands != other.strands:
            raise ValueError("strand count mismatch: %d vs %d" % (self.strands, other.strands))
        return BraidWord(self.strands, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return (isinstance(other, BraidWord)
                and self.strands == other.strands
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.strands, self.letters))

    def inverse(self):
        return BraidWord(self.strands, [-a for a in reversed(self.letters)])

    def exponent_sum(self):
        return sum(1 if a > 0 else -1 for a in self.letters)

    def permutation(self):
        return permutation_of(self)

    def normal_form(self):
        """Left greedy normal form (delta_power, tuple of factor permutations).

        The factor permutations are 0-indexed tuples; none is the identity
        or the half twist.  Two words are equal in B_n iff their normal
        forms coincide.
        """
        if self._nf is None:
            self._nf = _left_normal_form(self.strands, self.letters)
        return self._nf


def permutation_of(w: BraidWord) -> Permutation:
    """The permutation of strand endpoints: position i at the top goes to
    position rho(i) at the bottom; each letter contributes an adjacent
    transposition."""
    pos = list(range(w.strands))  # pos[strand] = current position, 0-based
    cur = list(range(w.strands))  # cur[position] = strand, 0-based
    for a in w.letters:
        k = abs(a) - 1
        u, v = cur[k], cur[k + 1]
        cur[k], cur[k + 1] = v, u
        pos[u], pos[v] = k + 1, k
    return Permutation(pos[i] + 1 for i in range(w.strands))


def invert(w: BraidWord) -> BraidWord:
    return w.inverse()


def braid_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Decide equality in B_n via the greedy normal form.

    Cheap invariants (exponent sum, permutation) are compared first.
    """
    if w1.strands != w2.strands:
        raise ValueError("cannot compare words in B_%d and B_%d" % (w1.strands, w2.strands))
    if w1.letters == w2.letters:
        return True
    if w1.exponent_sum() != w2.exponent_sum():
        return False
    if permutation_of(w1) != permutation_of(w2):
        return False
    return w1.normal_form() == w2.normal_form()


def is_trivial(w: BraidWord) -> bool:
    if not w.letters:
        return True
    if w.exponent_sum() != 0:
        return False
    return w.normal_form() == (0, ())


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity()


def is_cyclic(w: BraidWord) -> bool:
    return permutation_of(w).is_cyclic()


def half_twist(d: int) -> BraidWord:
    """The Garside half twist Delta_d = (s1)(s2 s1)...(s_{d-1} ... s1).

    Its square generates the center of B_d for d >= 3.
    """
    if d < 2:
        raise ValueError("half twist needs d >= 2")
    letters = []
    for k in range(1, d):
        letters.extend(range(k, 0, -1))
    return BraidWord(d, letters)


def shifted(w: BraidWord, offset: int, strands: int) -> BraidWord:
    """Embed w on strands offset+1 .. offset+w.strands inside B_strands."""
    if offset < 0 or offset + w.strands > strands:
        raise ValueError("shift out of range")
    return BraidWord(strands, [a + offset if a > 0 else a - offset for a in w.letters])


def cable(w: BraidWord, widths) -> BraidWord:
    """Replace strand j by widths[j] parallel strands travelling together.

    Widths are attached to strands (tracked through the word by current
    position), not to positions.  A crossing of blocks of widths (a, b)
    expands to the standard a*b crossings of uniform sign.
    """
    widths = list(widths)
    if len(widths) != w.strands:
        raise ValueError("need one width per strand")
    if any(x < 1 for x in widths):
        raise ValueError("widths must be positive")
    total = sum(widths)
    order = list(range(w.strands))  # block ids by current position
    out = []
    for a in w.letters:
        k = abs(a) - 1
        left, right = order[k], order[k + 1]
        start = 1 + sum(widths[b] for b in order[:k])
        wa, wb = widths[left], widths[right]
        for t in range(wb):
            run = range(start + wa + t - 1, start + t - 1, -1)
            out.extend(run if a > 0 else (-j for j in run))
        order[k], order[k + 1] = right, left
    return BraidWord(total, out)


def delete_strands(w: BraidWord, kill) -> BraidWord:
    """Forget the strands whose TOP positions lie in `kill`.

    Crossings involving a deleted strand are dropped; surviving letters
    are renumbered by position tracing.  Inverse to cabling: deleting all
    but one leader per block of a cable recovers the original word up to
    braid equality.
    """
    kill = set(kill)
    if not kill <= set(range(1, w.strands + 1)):
        raise ValueError("strand indices out of range")
    if len(kill) >= w.strands:
        raise ValueError("cannot delete every strand")
    occ = list(range(1, w.strands + 1))  # occ[position] = strand id at top
    out = []
    for a in w.letters:
        k = abs(a) - 1
        u, v = occ[k], occ[k + 1]
        if u not in kill and v not in kill:
            j = k + 1 - sum(1 for p in range(k) if occ[p] in kill)
            out.append(j if a > 0 else -j)
        occ[k], occ[k + 1] = v, u
    return BraidWord(w.strands - len(kill), out)


def word_from_permutation(p: Permutation) -> BraidWord:
    """The positive permutation braid realizing p (each pair of strands
    crosses at most once)."""
    arr = list(p.image)
    n = len(arr)
    letters = []
    i = 0
    while i < n - 1:
        if arr[i] > arr[i + 1]:
            letters.append(i + 1)
            arr[i], arr[i + 1] = arr[i + 1], arr[i]
            if i > 0:
                i -= 1
        else:
            i += 1
    return BraidWord(n, letters)


# ---------------------------------------------------------------------------
# Left greedy normal form.
#
# A simple element (permutation braid) is stored as a 0-indexed permutation
# tuple p with p[i] = bottom position of the strand starting at top
# position i.  Products compose left to right.  The word is rewritten as
# Delta^k A_1 ... A_s with the A_j simple, then adjacent factors are
# left-weighted until stable; identity factors vanish and Delta factors
# migrate into the prefix power.


def _tau(p):
    # conjugation by Delta: reverse positions and values
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


def _leftweight_pair(a, b):
    """Slide generators from b into a until the pair is left-weighted.

    Returns the new pair, or None if nothing moved.  A generator s_i can
    move iff i is a descent of b (s_i divides b on the left) and not a
    finishing generator of a (a * s_i stays simple).
    """
    n = len(a)
    inv = [0] * n
    for i, x in enumerate(a):
        inv[x] = i
    for i in range(n - 1):
        if b[i] > b[i + 1] and inv[i] < inv[i + 1]:
            break
    else:
        return None
    la, lb = list(a), list(b)
    stack = [i for i in range(n - 1) if lb[i] > lb[i + 1] and inv[i] < inv[i + 1]]
    while stack:
        i = stack.pop()
        if i < 0 or i >= n - 1:
            continue
        if not (lb[i] > lb[i + 1] and inv[i] < inv[i + 1]):
            continue
        pa, pb = inv[i], inv[i + 1]
        la[pa], la[pb] = i + 1, i
        inv[i], inv[i + 1] = pb, pa
        lb[i], lb[i + 1] = lb[i + 1], lb[i]
        stack.extend((i - 1, i, i + 1))
    return tuple(la), tuple(lb)


def _free_reduce(letters):
    out = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return out


def _left_normal_form(n, letters):
    if n == 1:
        return (0, ())
    letters = _free_reduce(letters)
    ident = tuple(range(n))
    delta = tuple(range(n - 1, 0 - 1, -1))

    # Rewrite each negative letter -k as Delta^{-1} (Delta s_k^{-1}); all
    # Delta^{-1} prefixes are pulled to the front, twisting later factors
    # by tau once per inverse passed (tau is an involution, so only the
    # parity of the count matters).
    raw = []
    negs = 0
    for a in letters:
        if a > 0:
            p = list(ident)
            p[a - 1], p[a] = p[a], p[a - 1]
            raw.append((tuple(p), negs))
        else:
            negs += 1
            k = -a
            p = list(delta)
            for j in range(n):
                if p[j] == k - 1:
                    p[j] = k
                elif p[j] == k:
                    p[j] = k - 1
            raw.append((tuple(p), negs))
    power = -negs
    factors = []
    for p, c in raw:
        if (negs - c) % 2 == 1:
            p = _tau(p)
        if p != ident:
            factors.append(p)

    factors = _stabilize(factors, ident)

    lead = 0
    while lead < len(factors) and factors[lead] == delta:
        lead += 1
    return (power + lead, tuple(factors[lead:]))


def _stabilize(factors, ident):
    """Left-weight every adjacent pair, processing only pairs whose
    neighbours changed (worklist over a linked list of factors)."""
    fs = [f for f in factors if f != ident]
    size = len(fs)
    if size <= 1:
        return fs
    nxt = list(range(1, size)) + [-1]
    prv = [-1] + list(range(size - 1))
    alive = [True] * size
    pend = deque(range(size - 1))
    inq = set(pend)
    while pend:
        i = pend.popleft()
        inq.discard(i)
        if not alive[i]:
            continue
        j = nxt[i]
        if j == -1:
            continue
        res = _leftweight_pair(fs[i], fs[j])
        if res is None:
            continue
        a2, b2 = res
        fs[i] = a2
        recheck = [prv[i]]
        if b2 == ident:
            alive[j] = False
            nxt[i] = nxt[j]
            if nxt[j] != -1:
                prv[nxt[j]] = i
            recheck.append(i)
        else:
            fs[j] = b2
            recheck.append(j)
        for cand in recheck:
            if cand != -1 and alive[cand] and cand not in inq:
                pend.append(cand)
                inq.add(cand)
    return [fs[i] for i in range(size) if alive[i]]

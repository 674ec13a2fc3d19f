"""Rooted d-ary forests with global leaf addressing.

A forest is an ordered sequence of rooted trees in which every internal
node (caret) has exactly d ordered children.  Leaves are numbered
1..l depth-first, left to right across the whole forest.  Text encoding:

    tree   := "." | "(" tree{d} ")"
    forest := tree ("|" tree)*

so "(..)|." is the binary forest whose first tree is a single caret.

Trees are nested tuples; a leaf is None.  Everything is immutable.

An expansion path is a tuple of leaf indices; applying carets at those
leaves in order (indices refer to the forest as it grows) carries a
source forest to a target forest.
"""

from __future__ import annotations

LEAF = None


def _tree_leaves(tree):
    if tree is LEAF:
        return 1
    return sum(_tree_leaves(c) for c in tree)


def _tree_carets(tree):
    if tree is LEAF:
        return 0
    return 1 + sum(_tree_carets(c) for c in tree)


def _check_arity(tree, d):
    if tree is LEAF:
        return
    if len(tree) != d:
        raise ValueError("caret with %d children in a %d-ary forest" % (len(tree), d))
    for c in tree:
        _check_arity(c, d)


class Forest:
    """An ordered (d,r)-forest.  leaves == roots + (d-1) * carets."""

    __slots__ = ("degree", "trees", "_leaves")

    def __init__(self, degree, trees):
        if degree < 2:
            raise ValueError("arity must be >= 2")
        trees = tuple(trees)
        if not trees:
            raise ValueError("a forest needs at least one root")
        for t in trees:
            _check_arity(t, degree)
        self.degree = degree
        self.trees = trees
        self._leaves = None

    @classmethod
    def trivial(cls, degree, roots):
        return cls(degree, (LEAF,) * roots)

    @property
    def roots(self):
        return len(self.trees)

    @property
    def leaves(self):
        if self._leaves is None:
            self._leaves = sum(_tree_leaves(t) for t in self.trees)
        return self._leaves

    @property
    def carets(self):
        return sum(_tree_carets(t) for t in self.trees)

    def is_trivial(self):
        return all(t is LEAF for t in self.trees)

    def is_elementary(self):
        """Every caret's children are leaves of the forest (depth <= 1 trees)."""
        return all(t is LEAF or all(c is LEAF for c in t) for t in self.trees)

    def __eq__(self, other):
        return (isinstance(other, Forest)
                and self.degree == other.degree
                and self.trees == other.trees)

    def __hash__(self):
        return hash((self.degree, self.trees))

    def __repr__(self):
        return "Forest(%d, %r)" % (self.degree, encode(self))

    def __str__(self):
        return encode(self)


def encode(forest: Forest) -> str:
    def enc(tree):
        if tree is LEAF:
            return "."
        return "(" + "".join(enc(c) for c in tree) + ")"
    return "|".join(enc(t) for t in forest.trees)


def decode(text: str, degree: int) -> Forest:
    """Parse the dot/parenthesis/pipe encoding; arity-checked."""
    trees = []
    for part in text.split("|"):
        part = part.strip()
        tree, pos = _parse_tree(part, 0, degree)
        if pos != len(part):
            raise ValueError("trailing characters in tree %r" % part)
        trees.append(tree)
    return Forest(degree, trees)


def _parse_tree(s, pos, d):
    if pos >= len(s):
        raise ValueError("unexpected end of tree encoding")
    ch = s[pos]
    if ch == ".":
        return LEAF, pos + 1
    if ch == "(":
        pos += 1
        children = []
        for _ in range(d):
            child, pos = _parse_tree(s, pos, d)
            children.append(child)
        if pos >= len(s) or s[pos] != ")":
            raise ValueError("expected ')' at position %d (is the arity %d?)" % (pos, d))
        return tuple(children), pos + 1
    raise ValueError("unexpected character %r at position %d" % (ch, pos))


def attach_caret(forest: Forest, i: int) -> Forest:
    """Replace leaf i (global numbering) by a caret with d fresh leaves."""
    if not 1 <= i <= forest.leaves:
        raise ValueError("leaf index %d out of range 1..%d" % (i, forest.leaves))
    d = forest.degree

    def rebuild(tree, skip):
        # returns (new_tree or None, leaves consumed)
        if tree is LEAF:
            if skip == 0:
                return (LEAF,) * d, 1
            return None, 1
        used = 0
        for idx, c in enumerate(tree):
            new, cnt = rebuild(c, skip - used)
            if new is not None:
                return tree[:idx] + (new,) + tree[idx + 1:], used + cnt
            used += cnt
        return None, used

    skip = i - 1
    trees = list(forest.trees)
    for idx, t in enumerate(trees):
        new, cnt = rebuild(t, skip)
        if new is not None:
            trees[idx] = new
            return Forest(d, trees)
        skip -= cnt
    raise AssertionError("unreachable")


def elementary_forest(n: int, J, d: int) -> Forest:
    """n roots, with a single caret on root i for each i in J."""
    J = set(J)
    if not J <= set(range(1, n + 1)):
        raise ValueError("J must be a subset of 1..%d" % n)
    caret = (LEAF,) * d
    return Forest(d, tuple(caret if i in J else LEAF for i in range(1, n + 1)))


def is_prefix(f: Forest, g: Forest) -> bool:
    """True iff g refines f node by node (f is obtained from g by pruning)."""
    _check_compatible(f, g)

    def pref(a, b):
        if a is LEAF:
            return True
        if b is LEAF:
            return False
        return all(pref(x, y) for x, y in zip(a, b))

    return all(pref(a, b) for a, b in zip(f.trees, g.trees))


def join(f: Forest, g: Forest):
    """Smallest common refinement, with expansion paths from both inputs.

    Returns (j, path_f, path_g) where apply_path(f, path_f) == j and
    apply_path(g, path_g) == j.
    """
    _check_compatible(f, g)

    def union(a, b):
        if a is LEAF:
            return b
        if b is LEAF:
            return a
        return tuple(union(x, y) for x, y in zip(a, b))

    j = Forest(f.degree, tuple(union(a, b) for a, b in zip(f.trees, g.trees)))
    return j, expansion_path(f, j), expansion_path(g, j)


def expansion_path(f: Forest, g: Forest):
    """A witness path of caret attachments carrying prefix f to g."""
    if not is_prefix(f, g):
        raise ValueError("source is not a prefix of target")
    path = []
    cur = f
    while cur != g:
        i = _first_expandable_leaf(cur, g)
        cur = attach_caret(cur, i)
        path.append(i)
    return tuple(path)


def apply_path(f: Forest, path) -> Forest:
    for i in path:
        f = attach_caret(f, i)
    return f


def _first_expandable_leaf(cur: Forest, target: Forest):
    # leaf index (1-based) of the first leaf of cur that is internal in target
    counter = [0]

    def walk(a, b):
        if a is LEAF:
            counter[0] += 1
            if b is not LEAF:
                return counter[0]
            return None
        for x, y in zip(a, b):
            hit = walk(x, y)
            if hit is not None:
                return hit
        return None

    for a, b in zip(cur.trees, target.trees):
        hit = walk(a, b)
        if hit is not None:
            return hit
    raise AssertionError("no expandable leaf although forests differ")


def _check_compatible(f, g):
    if f.degree != g.degree:
        raise ValueError("arity mismatch: %d vs %d" % (f.degree, g.degree))
    if f.roots != g.roots:
        raise ValueError("root count mismatch: %d vs %d" % (f.roots, g.roots))


def elementary_caret_spans(forest: Forest):
    """For each elementary caret, the global index of its first leaf.

    Returned in increasing order.  Non-elementary carets are skipped.
    """
    spans = []
    counter = [0]

    def walk(tree):
        if tree is LEAF:
            counter[0] += 1
            return
        if all(c is LEAF for c in tree):
            spans.append(counter[0] + 1)
            counter[0] += len(tree)
            return
        for c in tree:
            walk(c)

    for t in forest.trees:
        walk(t)
    return spans


def remove_elementary_caret(forest: Forest, start: int) -> Forest:
    """Collapse the elementary caret whose leaves start at `start` back to
    a leaf."""
    d = forest.degree
    counter = [0]

    def rebuild(tree):
        if tree is LEAF:
            counter[0] += 1
            return tree, False
        if all(c is LEAF for c in tree):
            if counter[0] + 1 == start:
                counter[0] += d
                return LEAF, True
            counter[0] += d
            return tree, False
        out = []
        hit = False
        for c in tree:
            new, h = rebuild(c)
            out.append(new)
            hit = hit or h
        return tuple(out), hit

    trees = []
    found = False
    for t in forest.trees:
        new, h = rebuild(t)
        trees.append(new)
        found = found or h
    if not found:
        raise ValueError("no elementary caret with leaves starting at %d" % start)
    return Forest(d, trees)


def forest_to_matching(forest: Forest):
    """The d-matching of an elementary forest: a caret over leaves
    i..i+d-1 becomes the interval (i, i+d-1).  Returns a frozenset of
    (start, end) pairs."""
    if not forest.is_elementary():
        raise ValueError("forest is not elementary")
    d = forest.degree
    return frozenset((s, s + d - 1) for s in elementary_caret_spans(forest))


def matching_to_forest(intervals, m: int, d: int) -> Forest:
    """Inverse of forest_to_matching: rebuild the elementary forest with m
    leaves from disjoint intervals [i, i+d-1] inside [1, m]."""
    starts = set()
    covered = set()
    for iv in intervals:
        a, b = iv
        if b != a + d - 1 or a < 1 or b > m:
            raise ValueError("bad interval %r for d=%d, m=%d" % (iv, d, m))
        block = set(range(a, b + 1))
        if covered & block:
            raise ValueError("overlapping intervals")
        covered |= block
        starts.add(a)
    trees = []
    p = 1
    caret = (LEAF,) * d
    while p <= m:
        if p in starts:
            trees.append(caret)
            p += d
        else:
            if p in covered:
                raise ValueError("interval not aligned at position %d" % p)
            trees.append(LEAF)
            p += 1
    return Forest(d, trees)

"""The labeled braid group B_l(H) for H a subgroup of B_d.

An element is a braid on l strands together with one label per strand,
indexed by the strand's TOP position.  The group is the semidirect
product B_l acting on H^l by permuting coordinates; stacking two labeled
braids multiplies the labels met along each composite strand, left to
right.

H is presented by a finite list of generator words in B_d.  Labels are
stored as words in those generators (never as raw B_d words), which
keeps them inside H without ever solving a membership problem; label
equality is decided after realization in B_d, which is sound and
complete because H embeds in B_d.
"""

from __future__ import annotations

from .braids import BraidWord, braid_equal, half_twist, is_pure, permutation_of


class LabelGroupSpec:
    """The label group H <= B_d, given by generator words.

    `require_pure` must hold for the F and T flavors of the diagram
    groups; it forces every generator into the pure braid group.
    """

    __slots__ = ("degree", "generators", "require_pure")

    def __init__(self, degree, generators=(), require_pure=False):
        if degree < 2:
            raise ValueError("label group lives in B_d with d >= 2")
        generators = tuple(generators)
        for g in generators:
            if not isinstance(g, BraidWord):
                raise TypeError("generators must be BraidWords")
            if g.strands != degree:
                raise ValueError("generator %r has %d strands, expected %d"
                                 % (str(g), g.strands, degree))
            if require_pure and not is_pure(g):
                raise ValueError("generator %r is not pure" % str(g))
        self.degree = degree
        self.generators = generators
        self.require_pure = require_pure

    @classmethod
    def trivial(cls, degree, require_pure=True):
        return cls(degree, (), require_pure)

    def __eq__(self, other):
        return (isinstance(other, LabelGroupSpec)
                and self.degree == other.degree
                and self.generators == other.generators
                and self.require_pure == other.require_pure)

    def __repr__(self):
        return "LabelGroupSpec(d=%d, gens=%r, require_pure=%r)" % (
            self.degree, [str(g) for g in self.generators], self.require_pure)


def ribbon_spec(d: int, oriented: bool) -> LabelGroupSpec:
    """Label group of the ribbon groups: the cyclic group generated by the
    half twist around the boundary (oriented: by the full twist, which is
    pure, so the spec is usable for the F and T flavors)."""
    delta = half_twist(d)
    if oriented:
        return LabelGroupSpec(d, (delta * delta,), require_pure=True)
    return LabelGroupSpec(d, (delta,), require_pure=False)


class Label:
    """A word in the declared H-generators: tuple of signed 1-based
    indices.  The empty word is the identity, printed "e"."""

    __slots__ = ("word",)

    def __init__(self, word=()):
        word = tuple(word)
        if any(x == 0 for x in word):
            raise ValueError("generator indices are signed and nonzero")
        self.word = word

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def generator(cls, i):
        return cls((i,))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "e":
            return cls()
        word = []
        for tok in text.split():
            inv = tok.endswith("^-1")
            body = tok[:-3] if inv else tok
            if not body.startswith("g"):
                raise ValueError("bad label token %r" % tok)
            try:
                idx = int(body[1:])
            except ValueError:
                raise ValueError("bad label token %r" % tok) from None
            if idx < 1:
                raise ValueError("generator index must be positive in %r" % tok)
            word.append(-idx if inv else idx)
        return cls(word)

    def __str__(self):
        if not self.word:
            return "e"
        return " ".join("g%d" % x if x > 0 else "g%d^-1" % -x for x in self.word)

    def __repr__(self):
        return "Label(%r)" % (str(self),)

    def __mul__(self, other):
        return Label(self.word + other.word)

    def inverse(self):
        return Label(tuple(-x for x in reversed(self.word)))

    def is_identity_word(self):
        return not self.word

    def realize(self, spec: LabelGroupSpec) -> BraidWord:
        """Substitute generator words; the result lives in B_d."""
        out = BraidWord(spec.degree)
        for x in self.word:
            if abs(x) > len(spec.generators):
                raise ValueError("label references undeclared generator g%d" % abs(x))
            g = spec.generators[abs(x) - 1]
            out = out * (g if x > 0 else g.inverse())
        return out

    def __eq__(self, other):
        return isinstance(other, Label) and self.word == other.word

    def __hash__(self):
        return hash(self.word)


class LabeledBraid:
    """A braid with one label per strand (by top position)."""

    __slots__ = ("braid", "labels")

    def __init__(self, braid, labels):
        labels = tuple(labels)
        if len(labels) != braid.strands:
            raise ValueError("%d labels for %d strands" % (len(labels), braid.strands))
        for lab in labels:
            if not isinstance(lab, Label):
                raise TypeError("labels must be Label words")
        self.braid = braid
        self.labels = labels

    @classmethod
    def trivial(cls, strands):
        return cls(BraidWord(strands), (Label(),) * strands)

    @property
    def strands(self):
        return self.braid.strands

    def __eq__(self, other):
        # word-level; group equality is lb_equal
        return (isinstance(other, LabeledBraid)
                and self.braid == other.braid
                and self.labels == other.labels)

    def __repr__(self):
        return "LabeledBraid(%r, %r)" % (str(self.braid), [str(x) for x in self.labels])


def lb_multiply(x: LabeledBraid, y: LabeledBraid) -> LabeledBraid:
    """Stack x on top of y.  The strand entering at top position i of x
    exits x at rho_x(i), so it picks up x.labels[i] then y.labels[rho_x(i)]."""
    if x.strands != y.strands:
        raise ValueError("strand count mismatch")
    rho = permutation_of(x.braid)
    labels = tuple(x.labels[i] * y.labels[rho(i + 1) - 1] for i in range(x.strands))
    return LabeledBraid(x.braid * y.braid, labels)


def lb_invert(x: LabeledBraid) -> LabeledBraid:
    """Solve lambda(i) * mu(rho(i)) = 1: the inverse labels the strand at
    top position j of the inverted braid by x.labels[rho^-1(j)]^-1."""
    rho_inv = permutation_of(x.braid).inverse()
    labels = tuple(x.labels[rho_inv(j + 1) - 1].inverse() for j in range(x.strands))
    return LabeledBraid(x.braid.inverse(), labels)


def lb_equal(spec: LabelGroupSpec, x: LabeledBraid, y: LabeledBraid) -> bool:
    """Equality in B_l(H): equal braids and equal realized labels."""
    if x.strands != y.strands:
        raise ValueError("strand count mismatch")
    if not braid_equal(x.braid, y.braid):
        return False
    for a, b in zip(x.labels, y.labels):
        if a == b:
            continue
        if not braid_equal(a.realize(spec), b.realize(spec)):
            return False
    return True


def lb_is_identity(spec: LabelGroupSpec, x: LabeledBraid) -> bool:
    from .braids import is_trivial
    if not is_trivial(x.braid):
        return False
    return all(lab.is_identity_word() or is_trivial(lab.realize(spec))
               for lab in x.labels)

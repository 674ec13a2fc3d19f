"""Elements of the labeled braided Thompson groups: expansion, the
unique reduced form, multiplication, and the retraction onto the label
group.

Run:  python3 demos/03_braided_thompson_elements.py
"""

from braidedthompson import (BraidWord, GroupContext, Label, LabeledBraid,
                             LabelGroupSpec, Spraige, braid_equal,
                             format_element, half_twist)
from braidedthompson.forests import decode

# The group of ternary split-braid-merge diagrams on one root, with
# labels in the cyclic group generated by the half twist of B_3.
spec = LabelGroupSpec(3, (half_twist(3),))
ctx = GroupContext(d=3, r=1, spec=spec, flavor="V")

# A three-leaf element: one split, a labeled braid, one merge.
caret = decode("(...)", 3)
g = Spraige(caret,
            LabeledBraid(BraidWord(3, [1, -2]),
                         (Label((1,)), Label(), Label())),
            caret)
print(format_element("g", g))

# Expansion at a leaf inserts the label braid into a 3-strand cable; the
# element does not change, only the diagram.
g2 = ctx.expand(g, 1)
print("\nexpanded at leaf 1: %d leaves" % g2.leaves)
print("still the same element:", ctx.equal(g, g2))
print("reduced back:", ctx.reduce(g2).leaves, "leaves")

# Group arithmetic with decidable equality.
h = ctx.multiply(g, g)
print("\ng*g has", h.leaves, "leaves; (g*g)*g^-1 == g:",
      ctx.equal(ctx.multiply(h, ctx.invert(g)), g))
print("g * g^-1 is the identity:", ctx.is_identity(ctx.multiply(g, ctx.invert(g))))

# The splitting generators: lambda attaches carets, mu undoes them.
lam = ctx.lambda_spraige(1, {1})
print("\nlambda: %d head, %d feet" % (lam.heads, lam.feet))
print("lambda * mu == identity:",
      ctx.is_identity(ctx.multiply(lam, ctx.mu_spraige(1, {1}))))

# The first-strand label is a retraction onto the label group.
h1 = Label((1, 1))
emb = ctx.iota_label(h1)
print("\nretraction of iota(g1^2):", ctx.r_label(emb),
      "== Delta^2:", braid_equal(ctx.r_label(emb),
                                 half_twist(3) * half_twist(3)))

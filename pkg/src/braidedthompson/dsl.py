"""Text format for group contexts and elements.

    group { d:2, r:1, flavor:V, gens:[1 1, 1 -1] }
    elem a {
      minus: (..)|.
      braid: 1
      labels: e; g1; g1^-1
      plus: .|(..)
    }

Whitespace is free everywhere; a braid word is a run of signed integers,
a label word is "e" or a run of g<i>[^-1] tokens separated by
whitespace, label words are separated by ";".  `gens:[]` declares the
trivial label group.  The F and T flavors require pure generators and
reject the header otherwise.
"""

from __future__ import annotations

from .braids import BraidWord, is_pure
from .diagrams import GroupContext, Spraige
from .forests import decode as decode_forest, encode as encode_forest
from .labeled import Label, LabeledBraid, LabelGroupSpec

_PUNCT = set("{}[],;:")


class DslError(ValueError):
    def __init__(self, message, line, col):
        super().__init__("line %d, column %d: %s" % (line, col, message))
        self.line = line
        self.col = col


class _Token:
    __slots__ = ("text", "line", "col")

    def __init__(self, text, line, col):
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    word = None
    for ch in text + "\n":
        if ch == "\n":
            if word:
                tokens.append(word)
                word = None
            line += 1
            col = 1
            continue
        if ch.isspace():
            if word:
                tokens.append(word)
                word = None
        elif ch in _PUNCT:
            if word:
                tokens.append(word)
                word = None
            tokens.append(_Token(ch, line, col))
        else:
            if word is None:
                word = _Token(ch, line, col)
            else:
                word.text += ch
        col += 1
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def error(self, message, token=None):
        if token is None:
            token = self.peek()
        if token is None:
            last = self.tokens[-1] if self.tokens else _Token("", 1, 1)
            raise DslError(message + " (at end of input)", last.line, last.col)
        raise DslError(message, token.line, token.col)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, text):
        tok = self.next()
        if tok.text != text:
            self.error("expected %r, found %r" % (text, tok.text), tok)
        return tok

    def at(self, text):
        tok = self.peek()
        return tok is not None and tok.text == text

    def int_token(self, what):
        tok = self.next()
        try:
            return int(tok.text)
        except ValueError:
            self.error("expected %s, found %r" % (what, tok.text), tok)

    def collect_ints(self):
        out = []
        while True:
            tok = self.peek()
            if tok is None:
                break
            try:
                out.append(int(tok.text))
            except ValueError:
                break
            self.pos += 1
        return out

    # -- grammar -----------------------------------------------------------

    def parse_header(self) -> GroupContext:
        self.expect("group")
        self.expect("{")
        self.expect("d")
        self.expect(":")
        d = self.int_token("an arity")
        self.expect(",")
        self.expect("r")
        self.expect(":")
        r = self.int_token("a root count")
        self.expect(",")
        self.expect("flavor")
        self.expect(":")
        tok = self.next()
        if tok.text not in ("V", "F", "T"):
            self.error("flavor must be V, F or T", tok)
        flavor = tok.text
        self.expect(",")
        self.expect("gens")
        self.expect(":")
        self.expect("[")
        gens = []
        if not self.at("]"):
            while True:
                start = self.peek()
                letters = self.collect_ints()
                try:
                    gens.append(BraidWord(d, letters))
                except ValueError as exc:
                    self.error(str(exc), start)
                if self.at(","):
                    self.next()
                    continue
                break
        self.expect("]")
        self.expect("}")
        require_pure = flavor in ("F", "T")
        if require_pure:
            for g in gens:
                if not is_pure(g):
                    self.error("flavor %s requires pure generators; %r is not pure"
                               % (flavor, str(g)))
        try:
            spec = LabelGroupSpec(d, gens, require_pure=require_pure)
            return GroupContext(d, r, spec, flavor)
        except ValueError as exc:
            self.error(str(exc))

    def parse_element(self, ctx: GroupContext):
        self.expect("elem")
        name_tok = self.next()
        name = name_tok.text
        if name in ("{", "}") or name in ("group", "elem"):
            self.error("bad element name %r" % name, name_tok)
        self.expect("{")
        self.expect("minus")
        self.expect(":")
        minus = self._forest(ctx.d)
        self.expect("braid")
        self.expect(":")
        braid_start = self.peek()
        letters = self.collect_ints()
        self.expect("labels")
        self.expect(":")
        labels = [self._label(len(ctx.spec.generators))]
        while self.at(";"):
            self.next()
            labels.append(self._label(len(ctx.spec.generators)))
        self.expect("plus")
        self.expect(":")
        plus = self._forest(ctx.d)
        self.expect("}")
        if minus.leaves != plus.leaves:
            self.error("forests have %d and %d leaves" % (minus.leaves, plus.leaves),
                       name_tok)
        if len(labels) != minus.leaves:
            self.error("%d labels for %d leaves" % (len(labels), minus.leaves), name_tok)
        try:
            braid = BraidWord(minus.leaves, letters)
        except ValueError as exc:
            self.error(str(exc), braid_start)
        return name, ctx.validate(Spraige(minus, LabeledBraid(braid, labels), plus))

    def _forest(self, d):
        tok = self.next()
        try:
            return decode_forest(tok.text, d)
        except ValueError as exc:
            self.error(str(exc), tok)

    def _label(self, n_gens):
        parts = []
        while True:
            tok = self.peek()
            if tok is None or tok.text in (";",):
                break
            if tok.text == "plus":
                nxt = self.tokens[self.pos + 1] if self.pos + 1 < len(self.tokens) else None
                if nxt is not None and nxt.text == ":":
                    break
            if not (tok.text == "e" or tok.text.startswith("g")):
                break
            parts.append(self.next())
        if not parts:
            self.error("expected a label word")
        if len(parts) == 1 and parts[0].text == "e":
            return Label()
        word = []
        for tok in parts:
            try:
                lab = Label.parse(tok.text)
            except ValueError as exc:
                self.error(str(exc), tok)
            word.extend(lab.word)
        lab = Label(word)
        for x in lab.word:
            if abs(x) > n_gens:
                self.error("label references undeclared generator g%d" % abs(x), parts[0])
        return lab


def parse_session(text):
    """Parse a header plus any number of elements.
    Returns (context, ordered dict of name -> Spraige)."""
    p = _Parser(text)
    ctx = p.parse_header()
    elements = {}
    while p.peek() is not None:
        name, s = p.parse_element(ctx)
        if name in elements:
            p.error("duplicate element name %r" % name)
        elements[name] = s
    return ctx, elements


def parse_element_text(ctx: GroupContext, text: str) -> Spraige:
    p = _Parser(text)
    _, s = p.parse_element(ctx)
    if p.peek() is not None:
        p.error("trailing input after element")
    return s


def format_header(ctx: GroupContext) -> str:
    gens = ", ".join(str(g) for g in ctx.spec.generators)
    return "group { d:%d, r:%d, flavor:%s, gens:[%s] }" % (ctx.d, ctx.r, ctx.flavor, gens)


def format_element(name: str, s: Spraige) -> str:
    labels = "; ".join(str(l) for l in s.lb.labels)
    return ("elem %s {\n  minus: %s\n  braid: %s\n  labels: %s\n  plus: %s\n}"
            % (name, encode_forest(s.minus), s.lb.braid, labels, encode_forest(s.plus)))


def format_session(ctx: GroupContext, elements) -> str:
    blocks = [format_header(ctx)]
    for name, s in elements.items():
        blocks.append(format_element(name, s))
    return "\n\n".join(blocks) + "\n"

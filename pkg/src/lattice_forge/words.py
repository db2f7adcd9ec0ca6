"""Free-semigroup words, identities, and nil normal forms.

The word grammar (shared by the CLI and the catalog identity files):
variables match ``[a-z][a-z0-9]*``; letters are joined by ``*`` or
whitespace; ``^k`` repeats the preceding variable ``k`` times (k >= 1);
an identity is ``word = word`` or ``word = 0``; ``#`` starts a comment.

``w = 0`` abbreviates the system ``w*x = x*w = w`` with a fresh variable
``x``: a semigroup satisfies it exactly when it has a zero element and every
value of ``w`` equals that zero.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed word or identity text. ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position})")
        self.position = position


class EmptyWordError(ParseError):
    pass


class BadExponentError(ParseError):
    pass


class UnclassifiableIdentityError(Exception):
    """Reserved for identities that escape the subvariety basis analysis.

    The normal-form case split in :func:`subvariety_basis` is total, so the
    current implementation never raises this; it exists so callers can trap a
    future partial analysis instead of silently mis-classifying.
    """


@dataclass(frozen=True)
class Word:
    """A non-empty sequence of variable letters of the free semigroup."""

    letters: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("a word must contain at least one letter")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.to_text()

    @property
    def content(self) -> frozenset[str]:
        """Set of variables occurring in the word."""
        return frozenset(self.letters)

    @property
    def is_linear(self) -> bool:
        """True when no variable occurs more than once."""
        return len(set(self.letters)) == len(self.letters)

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def power(self, k: int) -> "Word":
        if k < 1:
            raise ValueError("power must be >= 1")
        return Word(self.letters * k)

    def to_text(self) -> str:
        """Grammar-compatible rendering, compressing runs with ``^``."""
        parts = []
        i = 0
        while i < len(self.letters):
            j = i
            while j < len(self.letters) and self.letters[j] == self.letters[i]:
                j += 1
            run = j - i
            parts.append(self.letters[i] if run == 1 else f"{self.letters[i]}^{run}")
            i = j
        return "*".join(parts)


def word(text_or_letters) -> Word:
    """Convenience constructor: a grammar string or an iterable of letters."""
    if isinstance(text_or_letters, Word):
        return text_or_letters
    if isinstance(text_or_letters, str):
        return parse_word(text_or_letters)
    return Word(tuple(text_or_letters))


@dataclass(frozen=True)
class Identity:
    """``lhs = rhs`` between words, or the zero identity ``lhs = 0`` (rhs None)."""

    lhs: Word
    rhs: Word | None

    @property
    def is_zero(self) -> bool:
        return self.rhs is None

    @property
    def is_trivial(self) -> bool:
        """A pair identity whose sides are the same word."""
        return self.rhs is not None and self.lhs == self.rhs

    @property
    def content(self) -> frozenset[str]:
        if self.rhs is None:
            return self.lhs.content
        return self.lhs.content | self.rhs.content

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        rhs = "0" if self.rhs is None else self.rhs.to_text()
        return f"{self.lhs.to_text()} = {rhs}"


_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<name>[a-z][a-z0-9]*)
      | (?P<int>[0-9]+)
      | (?P<op>[*^=])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    text = text.split("#", 1)[0]
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


def _parse_word_tokens(tokens, i, end_pos):
    """Parse a word from ``tokens[i:]``; returns (Word, next index)."""
    letters: list[str] = []
    n = len(tokens)
    while i < n and tokens[i][0] == "name":
        name = tokens[i][1]
        i += 1
        count = 1
        if i < n and tokens[i][0] == "op" and tokens[i][1] == "^":
            caret_pos = tokens[i][2]
            i += 1
            if i >= n or tokens[i][0] != "int":
                raise ParseError("'^' must be followed by a positive integer", caret_pos)
            count = int(tokens[i][1])
            if count < 1:
                raise BadExponentError(f"exponent must be >= 1, got {count}", tokens[i][2])
            i += 1
        letters.extend([name] * count)
        if i < n and tokens[i][0] == "op" and tokens[i][1] == "*":
            star_pos = tokens[i][2]
            i += 1
            if i >= n or tokens[i][0] != "name":
                raise ParseError("expected a variable after '*'", star_pos)
    if not letters:
        pos = tokens[i][2] if i < n else end_pos
        raise EmptyWordError("expected a non-empty word", pos)
    return Word(tuple(letters)), i


def parse_word(text: str) -> Word:
    tokens = _tokenize(text)
    w, i = _parse_word_tokens(tokens, 0, len(text))
    if i != len(tokens):
        raise ParseError(f"unexpected {tokens[i][1]!r} after word", tokens[i][2])
    return w


def parse_identity(text: str) -> Identity:
    tokens = _tokenize(text)
    lhs, i = _parse_word_tokens(tokens, 0, len(text))
    if i >= len(tokens) or tokens[i][:2] != ("op", "="):
        pos = tokens[i][2] if i < len(tokens) else len(text)
        raise ParseError("expected '=' between the two sides", pos)
    i += 1
    if i < len(tokens) and tokens[i][0] == "int":
        if tokens[i][1] != "0" or i + 1 != len(tokens):
            raise ParseError("the right side must be a word or the literal '0'", tokens[i][2])
        return Identity(lhs, None)
    rhs, i = _parse_word_tokens(tokens, i, len(text))
    if i != len(tokens):
        raise ParseError(f"unexpected {tokens[i][1]!r} after identity", tokens[i][2])
    return Identity(lhs, rhs)


def parse_identity_file(text: str) -> list[Identity]:
    """One identity per line; blank lines and '#' comments are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            out.append(parse_identity(line))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.args[0]}", exc.position) from exc
    return out


def content(w: Word) -> frozenset[str]:
    return w.content


def length(w: Word) -> int:
    return len(w)


def is_linear(w: Word) -> bool:
    return w.is_linear


@dataclass(frozen=True)
class NormalForm:
    """Canonical form of a word in a commutative semigroup where every word
    containing a square annihilates (axioms ``x^2*y = 0`` and ``x*y = y*x``).

    Exactly three shapes survive: the single squared variable, linear words
    (canonically sorted thanks to commutativity), and zero for everything
    else.
    """

    kind: str  # "zero" | "square" | "linear"
    letters: tuple[str, ...] = ()

    def to_text(self) -> str:
        if self.kind == "zero":
            return "0"
        if self.kind == "square":
            return f"{self.letters[0]}^2"
        return "*".join(self.letters)

    def word(self) -> Word | None:
        """A representative word, or None for the zero form."""
        if self.kind == "zero":
            return None
        if self.kind == "square":
            return Word((self.letters[0], self.letters[0]))
        return Word(self.letters)


def normal_form(w: Word) -> NormalForm:
    counts = Counter(w.letters)
    if len(w) == 2 and len(counts) == 1:
        return NormalForm("square", (w.letters[0],))
    if all(c == 1 for c in counts.values()):
        return NormalForm("linear", tuple(sorted(counts)))
    return NormalForm("zero")


@dataclass(frozen=True)
class BasisSummary:
    """Which of the two canonical law families a set of identities forces,
    interpreted inside the ambient commutative square-annihilating theory:
    ``x^2 = 0``, and/or ``x1*...*xn = 0`` for the least such n.
    """

    square_zero: bool
    nil_degree: int | None


def subvariety_basis(identities) -> BasisSummary:
    """Reduce extra identities to the two-parameter canonical basis.

    Both sides of each identity are normalized first.  An identity whose
    sides share a normal form adds nothing.  Distinct normal forms force
    every non-zero side to collapse: a square side forces ``x^2 = 0`` and a
    linear side of length n forces ``x1*...*xn = 0`` (the least n over all
    supplied identities is reported).
    """
    square_zero = False
    nil_degree: int | None = None

    def collapse(nf: NormalForm):
        nonlocal square_zero, nil_degree
        if nf.kind == "square":
            square_zero = True
        elif nf.kind == "linear":
            n = len(nf.letters)
            nil_degree = n if nil_degree is None else min(nil_degree, n)

    for ident in identities:
        if ident.rhs is None:
            collapse(normal_form(ident.lhs))
        else:
            a = normal_form(ident.lhs)
            b = normal_form(ident.rhs)
            if a != b:
                collapse(a)
                collapse(b)
    return BasisSummary(square_zero, nil_degree)


def substitute(w: Word, var: str, replacement: Word) -> Word:
    """Replace every occurrence of ``var`` by ``replacement``."""
    out: list[str] = []
    for letter in w.letters:
        if letter == var:
            out.extend(replacement.letters)
        else:
            out.append(letter)
    return Word(tuple(out))


def variables(n: int) -> list[str]:
    """The standard variable names x1..xn."""
    return [f"x{t}" for t in range(1, n + 1)]


def block_power_identity(n: int, i: int, j: int, exponent: int) -> Identity:
    """The identity x1..xn = x1..x(i-1) (xi..xj)^exponent x(j+1)..xn.

    Indices are 1-based with 1 <= i <= j <= n; exponent >= 1.
    """
    if not (1 <= i <= j <= n):
        raise ValueError(f"need 1 <= i <= j <= n, got i={i}, j={j}, n={n}")
    if exponent < 1:
        raise ValueError(f"exponent must be >= 1, got {exponent}")
    xs = variables(n)
    rhs = xs[: i - 1] + xs[i - 1 : j] * exponent + xs[j:]
    return Identity(Word(tuple(xs)), Word(tuple(rhs)))

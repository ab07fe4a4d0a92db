"""Letters, words, factorization schemes, and the product map into matrices.

For ambient size n the alphabet has three kinds of letters, each with a
parameter t and an elementary matrix:

* ``upper i`` (1 <= i < n): identity plus t in entry (i, i+1); written ``i``
* ``lower i`` (1 <= i < n): identity plus t in entry (i+1, i); written ``i~``
* ``diag i``  (1 <= i <= n): identity with entry (i, i) replaced by t
  (t must be nonzero); written ``@i``

Words are whitespace-separated in the ASCII encoding, e.g.
``"2~ 1 @3 2 1~ @1 2~ 1 @2"``.  A *factorization scheme* is a word that
contains each diag letter exactly once and whose lower (resp. upper)
subword is a reduced word; its type is the pair of permutations those
subwords represent.

Local moves rewrite a word while transporting parameters so that the
matrix product is unchanged; all transport formulas are subtraction-free,
so positive parameters stay positive.  Three kinds exist:

* ``swap``: two adjacent commuting letters trade places.  Slant letters of
  the same kind commute when their indices differ by >= 2, slant letters of
  opposite kinds when their indices differ; both keep parameters.  A diag
  letter commutes with everything, rescaling the slant parameter it passes
  by a monomial.
* ``braid``: ``(i, j, i) -> (j, i, j)`` on same-kind slants with |i-j| = 1,
  with (t1, t2, t3) -> (t2 t3 / T, T, t1 t2 / T), T = t1 + t3.
* ``mixed``: the four-letter relation
  ``(upper i, diag i, diag i+1, lower i) -> (lower i, diag i, diag i+1,
  upper i)`` with (t1, t2, t3, t4) -> (t3 t4 / T, T, t2 t3 / T, t1 t3 / T),
  T = t2 + t1 t3 t4, and its inverse in the other direction.

Only the braid and mixed formulas are forced; the diag rescalings follow
from 2x2 matrix algebra and are re-verified by the product-preservation
tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import as_scalar
from .matrices import Matrix

UPPER = "upper"
LOWER = "lower"
DIAG = "diag"


class WordError(ValueError):
    """Malformed word, scheme, or inapplicable move."""


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """Permutation of [1, n] stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..n")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        """The order-reversing permutation, the longest element."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Function composition: (p * q)(k) = p(q(k))."""
        return Permutation(tuple(self.images[other.images[k] - 1]
                                 for k in range(self.n)))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            images[v - 1] = k
        return Permutation(tuple(images))

    def length(self) -> int:
        """Number of inversions."""
        return sum(1 for a, b in itertools.combinations(self.images, 2)
                   if a > b)

    def one_line(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"

    def matrix(self) -> Matrix:
        n = self.n
        return Matrix([[1 if self.images[j] == i + 1 else 0
                        for j in range(n)] for i in range(n)])


def permutation_of_word(gens: Sequence[int], n: int) -> Permutation:
    """Product of adjacent transpositions, composed in word order."""
    w = Permutation.identity(n)
    for g in gens:
        if not 1 <= g <= n - 1:
            raise ValueError(f"generator {g} out of range for n={n}")
        w = w * Permutation.transposition(n, g)
    return w


def is_reduced_word(gens: Sequence[int], n: int) -> bool:
    """True iff the word has the shortest possible length for its product."""
    return len(gens) == permutation_of_word(gens, n).length()


def is_reduced_word_for(gens: Sequence[int], w: Permutation) -> bool:
    return (permutation_of_word(gens, w.n) == w
            and len(gens) == w.length())


def reduced_words(w: Permutation):
    """Enumerate all reduced words for w by backtracking over right descents."""
    if w.length() == 0:
        yield ()
        return
    for i in range(1, w.n):
        if w(i) > w(i + 1):
            shorter = w * Permutation.transposition(w.n, i)
            for prefix in reduced_words(shorter):
                yield prefix + (i,)


# ---------------------------------------------------------------------------
# letters and words


@dataclass(frozen=True)
class Letter:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in (UPPER, LOWER, DIAG):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.index < 1:
            raise ValueError("letter index must be >= 1")

    @property
    def is_slant(self) -> bool:
        return self.kind != DIAG

    def __str__(self) -> str:
        if self.kind == UPPER:
            return str(self.index)
        if self.kind == LOWER:
            return f"{self.index}~"
        return f"@{self.index}"


def upper(i: int) -> Letter:
    return Letter(UPPER, i)


def lower(i: int) -> Letter:
    return Letter(LOWER, i)


def diag(i: int) -> Letter:
    return Letter(DIAG, i)


Word = tuple[Letter, ...]


def parse_word(text: str) -> Word:
    letters = []
    for token in text.split():
        if token.startswith("@"):
            letters.append(diag(int(token[1:])))
        elif token.endswith("~"):
            letters.append(lower(int(token[:-1])))
        else:
            letters.append(upper(int(token)))
    return tuple(letters)


def format_word(word: Iterable[Letter]) -> str:
    return " ".join(str(letter) for letter in word)


def infer_n(word: Word) -> int:
    """Smallest ambient size compatible with the letters."""
    n = 1
    for letter in word:
        n = max(n, letter.index + (0 if letter.kind == DIAG else 1))
    return n


def validate_word(word: Word, n: int) -> None:
    for letter in word:
        top = n if letter.kind == DIAG else n - 1
        if letter.index > top:
            raise WordError(f"letter {letter} out of range for n={n}")


def elementary_matrix(letter: Letter, t, n: int) -> Matrix:
    """The elementary Jacobi matrix of one letter at parameter t."""
    t = as_scalar(t)
    validate_word((letter,), n)
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    i = letter.index
    if letter.kind == UPPER:
        rows[i - 1][i] = t
    elif letter.kind == LOWER:
        rows[i][i - 1] = t
    else:
        if t == 0:
            raise WordError(f"diag letter @{i} is undefined at parameter 0")
        rows[i - 1][i - 1] = t
    return Matrix(rows)


def product_map(word: Word, params: Sequence, n: int | None = None) -> Matrix:
    """Ordered product of the elementary matrices of a word.

    Diag letters require nonzero parameters; slant parameters may be any
    rational (zero included, for boundary factorizations).
    """
    if n is None:
        n = infer_n(word)
    params = [as_scalar(t) for t in params]
    if len(params) != len(word):
        raise WordError(f"{len(word)} letters but {len(params)} parameters")
    result = Matrix.identity(n)
    for letter, t in zip(word, params):
        result = result * elementary_matrix(letter, t, n)
    return result


def staircase_scheme(n: int) -> Word:
    """The length-n^2 scheme whose chips deform into the standard network:
    a falling staircase of lower letters, the diag letters in ascending
    order, then the mirrored rising staircase of upper letters."""
    slants = [i for k in range(n - 1, 0, -1) for i in range(k, n)]
    return (tuple(lower(i) for i in slants)
            + tuple(diag(i) for i in range(1, n + 1))
            + tuple(upper(i) for i in slants))


def subword_indices(word: Word, kind: str) -> list[int]:
    return [p for p, letter in enumerate(word) if letter.kind == kind]


def validate_scheme(word: Word, n: int | None = None) \
        -> tuple[Permutation, Permutation]:
    """Check the scheme shape and return its type (u, v).

    Requires each diag letter 1..n exactly once, the lower subword reduced
    (giving u) and the upper subword reduced (giving v).
    """
    if n is None:
        n = infer_n(word)
    validate_word(word, n)
    diag_indices = sorted(letter.index for letter in word
                          if letter.kind == DIAG)
    if diag_indices != list(range(1, n + 1)):
        raise WordError(
            f"diag letters must appear exactly once each; got {diag_indices}")
    lowers = [letter.index for letter in word if letter.kind == LOWER]
    uppers = [letter.index for letter in word if letter.kind == UPPER]
    if not is_reduced_word(lowers, n):
        raise WordError(f"lower subword {lowers} is not reduced")
    if not is_reduced_word(uppers, n):
        raise WordError(f"upper subword {uppers} is not reduced")
    return permutation_of_word(lowers, n), permutation_of_word(uppers, n)


def is_full_scheme(word: Word, n: int | None = None) -> bool:
    """True iff the scheme has type (reversal, reversal)."""
    if n is None:
        n = infer_n(word)
    try:
        u, v = validate_scheme(word, n)
    except WordError:
        return False
    rev = Permutation.reversal(n)
    return u == rev and v == rev


# ---------------------------------------------------------------------------
# local moves and parameter transport


@dataclass(frozen=True)
class Move:
    kind: str  # "swap" | "braid" | "mixed"
    pos: int   # leftmost 0-based position of the rewritten block


def _swap_ok(a: Letter, b: Letter) -> bool:
    if a.kind == DIAG or b.kind == DIAG:
        return True
    if a.kind == b.kind:
        return abs(a.index - b.index) >= 2
    return a.index != b.index


def _diag_passes_slant_right(diag_index: int, slant: Letter, t: Fraction,
                             s: Fraction) -> Fraction:
    """New slant parameter when ``diag k (s)`` moves right past a slant (t)."""
    if slant.kind == UPPER:
        if diag_index == slant.index:
            return t * s
        if diag_index == slant.index + 1:
            return t / s
    else:
        if diag_index == slant.index + 1:
            return t * s
        if diag_index == slant.index:
            return t / s
    return t


def _apply_swap(word: list[Letter], params: list[Fraction], p: int) -> None:
    a, b = word[p], word[p + 1]
    if not _swap_ok(a, b):
        raise WordError(f"letters {a} {b} do not commute")
    ta, tb = params[p], params[p + 1]
    if a.kind == DIAG and b.kind != DIAG:
        tb = _diag_passes_slant_right(a.index, b, tb, ta)
    elif b.kind == DIAG and a.kind != DIAG:
        # diag moves left: inverse of the rescaling it applies moving right
        ta = _diag_passes_slant_right(b.index, a, ta, 1 / tb)
    word[p], word[p + 1] = b, a
    params[p], params[p + 1] = tb, ta


def _braid_ok(word: Sequence[Letter], p: int) -> bool:
    if p + 2 >= len(word):
        return False
    a, b, c = word[p], word[p + 1], word[p + 2]
    return (a.is_slant and a.kind == b.kind == c.kind
            and a.index == c.index and abs(a.index - b.index) == 1)


def _apply_braid(word: list[Letter], params: list[Fraction], p: int) -> None:
    if not _braid_ok(word, p):
        raise WordError(f"no braid pattern at position {p}")
    t1, t2, t3 = params[p:p + 3]
    total = t1 + t3
    if total == 0:
        raise WordError("braid transport undefined: t1 + t3 = 0")
    kind = word[p].kind
    i, j = word[p].index, word[p + 1].index
    word[p:p + 3] = [Letter(kind, j), Letter(kind, i), Letter(kind, j)]
    params[p:p + 3] = [t2 * t3 / total, total, t1 * t2 / total]


def _mixed_pattern(word: Sequence[Letter], p: int) -> str | None:
    """Return "forward" for (upper i, diag i, diag i+1, lower i),
    "backward" for the reversed kinds, else None."""
    if p + 3 >= len(word):
        return None
    a, b, c, d = word[p:p + 4]
    if not (b.kind == DIAG and c.kind == DIAG
            and b.index == a.index and c.index == a.index + 1
            and d.index == a.index):
        return None
    if a.kind == UPPER and d.kind == LOWER:
        return "forward"
    if a.kind == LOWER and d.kind == UPPER:
        return "backward"
    return None


def _apply_mixed(word: list[Letter], params: list[Fraction], p: int) -> None:
    pattern = _mixed_pattern(word, p)
    if pattern is None:
        raise WordError(f"no mixed four-letter pattern at position {p}")
    t1, t2, t3, t4 = params[p:p + 4]
    i = word[p].index
    if pattern == "forward":
        total = t2 + t1 * t3 * t4
        if total == 0:
            raise WordError("mixed transport undefined at this parameter point")
        params[p:p + 4] = [t3 * t4 / total, total,
                           t2 * t3 / total, t1 * t3 / total]
        word[p] = lower(i)
        word[p + 3] = upper(i)
    else:
        total = t3 + t1 * t2 * t4
        if total == 0:
            raise WordError("mixed transport undefined at this parameter point")
        params[p:p + 4] = [t2 * t4 / total, t2 * t3 / total,
                           total, t1 * t2 / total]
        word[p] = upper(i)
        word[p + 3] = lower(i)


def local_move_transport(word: Word, params: Sequence, move: Move) \
        -> tuple[Word, tuple[Fraction, ...]]:
    """Apply one local move, returning the rewritten word and transported
    parameters; the matrix product is preserved exactly."""
    letters = list(word)
    values = [as_scalar(t) for t in params]
    if len(letters) != len(values):
        raise WordError("word/parameter length mismatch")
    if move.pos < 0 or move.pos >= len(letters):
        raise WordError(f"move position {move.pos} out of range")
    if move.kind == "swap":
        _apply_swap(letters, values, move.pos)
    elif move.kind == "braid":
        _apply_braid(letters, values, move.pos)
    elif move.kind == "mixed":
        _apply_mixed(letters, values, move.pos)
    else:
        raise WordError(f"unknown move kind {move.kind!r}")
    return tuple(letters), tuple(values)


def apply_move_word(word: Word, move: Move) -> Word:
    """Word-only rewriting (used for path search; no parameters)."""
    ones = [Fraction(1)] * len(word)
    new_word, _ = local_move_transport(word, ones, move)
    return new_word


def applicable_moves(word: Word) -> list[Move]:
    """All moves legal at their positions in this word."""
    moves = []
    for p in range(len(word) - 1):
        if _swap_ok(word[p], word[p + 1]):
            moves.append(Move("swap", p))
    for p in range(len(word) - 2):
        if _braid_ok(word, p):
            moves.append(Move("braid", p))
    for p in range(len(word) - 3):
        if _mixed_pattern(word, p) is not None:
            moves.append(Move("mixed", p))
    return moves


# ---------------------------------------------------------------------------
# routing a scheme to the staircase scheme


class _Rewriter:
    """Mutable word with a move log; used to canonicalize schemes."""

    def __init__(self, word: Word):
        self.word = list(word)
        self.moves: list[Move] = []

    def swap(self, p: int) -> None:
        if not _swap_ok(self.word[p], self.word[p + 1]):
            raise WordError(f"illegal swap at {p}")
        self.word[p], self.word[p + 1] = self.word[p + 1], self.word[p]
        self.moves.append(Move("swap", p))

    def braid(self, p: int) -> None:
        if not _braid_ok(self.word, p):
            raise WordError(f"illegal braid at {p}")
        a, b = self.word[p], self.word[p + 1]
        self.word[p:p + 3] = [b, a, b]
        self.moves.append(Move("braid", p))

    def mixed(self, p: int) -> None:
        pattern = _mixed_pattern(self.word, p)
        if pattern is None:
            raise WordError(f"illegal mixed move at {p}")
        i = self.word[p].index
        if pattern == "forward":
            self.word[p], self.word[p + 3] = lower(i), upper(i)
        else:
            self.word[p], self.word[p + 3] = upper(i), lower(i)
        self.moves.append(Move("mixed", p))

    def push_diags_right(self) -> None:
        moved = True
        while moved:
            moved = False
            for p in range(len(self.word) - 1):
                if (self.word[p].kind == DIAG
                        and self.word[p + 1].kind != DIAG):
                    self.swap(p)
                    moved = True

    def find_diag(self, index: int) -> int:
        for p, letter in enumerate(self.word):
            if letter.kind == DIAG and letter.index == index:
                return p
        raise WordError(f"diag letter @{index} missing")

    def pull_diag_to(self, index: int, target: int) -> None:
        p = self.find_diag(index)
        while p > target:
            self.swap(p - 1)
            p -= 1
        while p < target:
            self.swap(p)
            p += 1


def _sort_slants(rw: _Rewriter) -> None:
    """Rewrite the slant region into all lowers followed by all uppers.

    Adjacent (upper, lower) pairs with distinct indices commute; equal
    indices need the four-letter mixed relation, for which the two diag
    letters involved are pulled in from the diag block and pushed back."""
    while True:
        pos = next((p for p in range(len(rw.word) - 1)
                    if rw.word[p].kind == UPPER
                    and rw.word[p + 1].kind == LOWER), None)
        if pos is None:
            return
        if rw.word[pos].index != rw.word[pos + 1].index:
            rw.swap(pos)
            continue
        i = rw.word[pos].index
        rw.pull_diag_to(i, pos + 1)
        rw.pull_diag_to(i + 1, pos + 2)
        rw.mixed(pos)
        rw.push_diags_right()


def _coxeter_path(source: tuple[int, ...], target: tuple[int, ...],
                  offset: int) -> list[Move]:
    """Braid/swap moves turning one reduced word into another, by breadth-
    first search over the reduced-word graph; positions get ``offset``."""
    if source == target:
        return []
    frontier = [source]
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], Move]] = {
        source: (source, Move("swap", -1))}
    while frontier:
        nxt = []
        for node in frontier:
            for p in range(len(node) - 1):
                a, b = node[p], node[p + 1]
                child = None
                move = None
                if abs(a - b) >= 2:
                    child = node[:p] + (b, a) + node[p + 2:]
                    move = Move("swap", offset + p)
                elif (p + 2 < len(node) and abs(a - b) == 1
                      and node[p + 2] == a):
                    child = node[:p] + (b, a, b) + node[p + 3:]
                    move = Move("braid", offset + p)
                if child is None or child in parents:
                    continue
                parents[child] = (node, move)
                if child == target:
                    path = [move]
                    back = node
                    while back != source:
                        back, mv = parents[back]
                        path.append(mv)
                    path.reverse()
                    return path
                nxt.append(child)
        frontier = nxt
    raise WordError("reduced words are not connected (should not happen)")


def moves_to_staircase(word: Word, n: int | None = None) -> list[Move]:
    """A move sequence rewriting a full-type scheme into the staircase
    scheme.  Raises if the word is not a scheme of type
    (reversal, reversal)."""
    if n is None:
        n = infer_n(word)
    if not is_full_scheme(word, n):
        raise WordError("word is not a factorization scheme of full type")
    if tuple(word) == staircase_scheme(n):
        return []
    rw = _Rewriter(word)
    rw.push_diags_right()
    _sort_slants(rw)
    # layout is now [lowers][uppers][diags]; bring diags into the middle
    n_lower = n * (n - 1) // 2
    for slot in range(n):
        # leftmost diag letter still to the right of its final block
        p = next(q for q in range(n_lower + slot, len(rw.word))
                 if rw.word[q].kind == DIAG)
        while p > n_lower + slot:
            rw.swap(p - 1)
            p -= 1
    # sort the diag block ascending
    base = n_lower
    while True:
        swapped = False
        for p in range(base, base + n - 1):
            if rw.word[p].index > rw.word[p + 1].index:
                rw.swap(p)
                swapped = True
        if not swapped:
            break
    # braid each slant block into the staircase word
    target = staircase_scheme(n)
    lower_now = tuple(l.index for l in rw.word[:n_lower])
    lower_goal = tuple(l.index for l in target[:n_lower])
    for move in _coxeter_path(lower_now, lower_goal, 0):
        getattr(rw, move.kind)(move.pos)
    upper_now = tuple(l.index for l in rw.word[n_lower + n:])
    upper_goal = tuple(l.index for l in target[n_lower + n:])
    for move in _coxeter_path(upper_now, upper_goal, n_lower + n):
        getattr(rw, move.kind)(move.pos)
    if tuple(rw.word) != target:
        raise WordError("canonicalization failed to reach the staircase")
    return rw.moves


def move_path(source: Word, target: Word, n: int | None = None) -> list[Move]:
    """Moves rewriting one full-type scheme into another.

    Every move kind is an involution at its position, so the return leg is
    the reversed canonicalization of the target."""
    if n is None:
        n = max(infer_n(source), infer_n(target))
    forward = moves_to_staircase(source, n)
    backward = moves_to_staircase(target, n)
    return forward + [m for m in reversed(backward)]


def transport_params(word: Word, params: Sequence, moves: Iterable[Move]) \
        -> tuple[Word, tuple[Fraction, ...]]:
    """Replay a move sequence, transporting parameters exactly."""
    current_word = tuple(word)
    current = tuple(as_scalar(t) for t in params)
    for move in moves:
        current_word, current = local_move_transport(current_word, current,
                                                     move)
    return current_word, current

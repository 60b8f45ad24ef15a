"""Words in the generators T, S, U, L of the (q-deformed) Picard group.

Words are read as operator products: the leftmost letter is applied last, so
``"T S"`` evaluates to ``T(S(x))``.  Deformed evaluation uses the q-operators of
:mod:`qgauss.moebius`; classical evaluation uses their s = 1 specializations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import IndeterminateError
from .field.gaussrat import GaussRat
from .field.ratfunc import RatFunc
from .moebius import (
    IDENTITY, MoebiusOp, classical_generator, generator, op_compose, op_inverse, op_pow,
    parse_letters,
)

LETTERS = ("T", "S", "U", "L")


@dataclass(frozen=True)
class GenWord:
    """A word as ((name, exponent), ...) with no zero exponents and no repeated adjacent names."""

    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        out: list[tuple[str, int]] = []
        for name, k in self.letters:
            if name == "U2":
                name, k = "U", 2 * k
            if name not in LETTERS:
                raise ValueError(f"unknown generator {name!r} in word")
            if out and out[-1][0] == name:
                k += out.pop()[1]
            if k:
                out.append((name, int(k)))
        object.__setattr__(self, "letters", tuple(out))

    @classmethod
    def parse(cls, text: str) -> GenWord:
        return cls(tuple(parse_letters(text)))

    @classmethod
    def coerce(cls, w) -> GenWord:
        if isinstance(w, GenWord):
            return w
        if isinstance(w, str):
            return cls.parse(w)
        return cls(tuple(w))

    def __len__(self) -> int:
        return sum(abs(k) for _, k in self.letters)

    def __mul__(self, other: GenWord) -> GenWord:
        return GenWord(self.letters + GenWord.coerce(other).letters)

    def inverse(self) -> GenWord:
        return GenWord(tuple((n, -k) for n, k in reversed(self.letters)))

    def __str__(self) -> str:
        if not self.letters:
            return "Id"
        return " ".join(n if k == 1 else f"{n}^{k}" for n, k in self.letters)


def word_eval(w, deformed: bool = True) -> MoebiusOp:
    """Compose the generators of ``w``; classical evaluation substitutes s = 1."""
    gen = generator if deformed else classical_generator
    op = IDENTITY
    for name, k in GenWord.coerce(w).letters:
        op = op_compose(op, op_pow(gen(name), k))
    return op


def word_flip(w) -> int:
    """(-1)^(total exponent of U and L)."""
    odd = sum(k for n, k in GenWord.coerce(w).letters if n in ("U", "L")) % 2
    return -1 if odd else 1


# -- relations ----------------------------------------------------------------

RELATIONS = (
    ("TU = UT", "T U T^-1 U^-1"),
    ("S^2 = Id", "S^2"),
    ("L^2 = Id", "L^2"),
    ("(TL)^2 = Id", "T L T L"),
    ("(SL)^2 = Id", "S L S L"),
    ("(UL)^2 = Id", "U L U L"),
    ("(TS)^3 = Id", "T S T S T S"),
    ("(USL)^3 = Id", "U S L U S L U S L"),
)


@dataclass(frozen=True)
class RelationResult:
    relation: str
    deformed: bool
    holds: bool
    expected: bool

    @property
    def ok(self) -> bool:
        """The outcome agrees with the expectation."""
        return self.holds == self.expected

    def to_json_obj(self) -> dict:
        return {"relation": self.relation, "deformed": self.deformed,
                "pass": self.holds, "expected": self.expected}


def relation_suite(deformed: bool = True) -> list[RelationResult]:
    """Check every relation; (USL)^3 = Id is expected to fail after deformation."""
    out = []
    for label, word in RELATIONS:
        holds = word_eval(word, deformed).is_identity()
        expected = not (deformed and label.startswith("(USL)"))
        out.append(RelationResult(label, deformed, holds, expected))
    return out


# -- the normal subgroup N --------------------------------------------------------

def n_membership(A: MoebiusOp) -> bool:
    """A is, up to a scalar, Id + (q - 1) * (matrix): flip +1 and A(s=1) scalar."""
    if A.flip != 1:
        return False
    a, b, c, d = A.specialize(1)
    if not (a or b or c or d):
        raise IndeterminateError("all normalized entries vanish at s = 1")
    return not b and not c and a == d and bool(a)


def n_decomposition(A: MoebiusOp) -> tuple[RatFunc, ...]:
    """Entries of A~ in lambda * A = Id + (q - 1) A~, with lambda fixing A(s=1) = Id.

    A~ is taken from the normalized polynomial representative; its entries may
    still have a pole at s = -1.
    """
    if not n_membership(A):
        raise ValueError("operator is not in the normal subgroup")
    lam = A.specialize(1)[0].inverse()
    qm1 = RatFunc.monomial(1, 2) - 1
    ident = (1, 0, 0, 1)
    return tuple((RatFunc.coerce(p) * RatFunc.const(lam) - e) / qm1
                 for p, e in zip(A.normalized, ident))


def _display(entries: list[str], flip: int = 1) -> MoebiusOp:
    from .render import parse_plain

    return MoebiusOp(*(parse_plain(e) for e in entries), flip=flip)


USL_DISPLAY = ("-1", "i*s^-1", "i*s", "i*s^-1 - i*s")
USL_INVERSE_DISPLAY = ("i*s - i*s^-1", "i*s^-1", "i*s", "1")
USL_CUBED_DISPLAY = ("1", "(q-1)*i*s^-1", "(q-1)*i*s", "1 + (q-1)*(1 - (s^-1 - s))")


@dataclass(frozen=True)
class UslReport:
    usl_matches: bool
    inverse_matches: bool
    cube_matches_display: bool
    cube_in_n: bool
    cube: MoebiusOp

    @property
    def ok(self) -> bool:
        return self.usl_matches and self.inverse_matches and self.cube_matches_display and self.cube_in_n


def usl_cubed_check() -> UslReport:
    """Compare U_q S_q L_q, its inverse and its cube with their displayed matrices."""
    usl = word_eval("U S L")
    cube = op_pow(usl, 3)
    return UslReport(
        usl == _display(list(USL_DISPLAY)),
        op_inverse(usl) == _display(list(USL_INVERSE_DISPLAY)),
        cube == _display(list(USL_CUBED_DISPLAY)),
        n_membership(cube),
        cube,
    )


# -- random relation search ----------------------------------------------------------

def random_word(rng: random.Random, max_len: int) -> GenWord:
    """A freely reduced word of length 1..max_len; S and L only with exponent 1."""
    length = rng.randint(1, max_len)
    letters: list[tuple[str, int]] = []
    while len(letters) < length:
        name = rng.choice(LETTERS)
        if letters and letters[-1][0] == name:
            continue
        k = 1 if name in ("S", "L") else rng.choice((1, -1))
        letters.append((name, k))
    return GenWord(tuple(letters))


def _classical_is_identity(w: GenWord) -> bool:
    """Fast exact filter: the s = 1 matrix product is scalar."""
    m = (GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(1))
    for name, k in w.letters:
        g = classical_generator(name).specialize(1)
        if k < 0:
            a, b, c, d = g
            g = (d, -b, -c, a)
        for _ in range(abs(k)):
            a, b, c, d = m
            e, f, gg, h = g
            m = (a * e + b * gg, a * f + b * h, c * e + d * gg, c * f + d * h)
    a, b, c, d = m
    return not b and not c and a == d


def reduces_by_relations(w) -> bool:
    """Heuristic rewriting to the empty word using TU = UT, S^2 = L^2 = (TL)^2 =
    (SL)^2 = (UL)^2 = Id and (TS)^3 = Id.

    L is pushed to the right (L T = T^-1 L, L U = U^-1 L, L S = S L), T and U
    are collected between consecutive S, and the word is treated cyclically
    (identity is invariant under conjugation).  Then S S is cancelled and
    S T^e S is rewritten to T^-e S T^-e for e = +-1; each step removes an S, so
    the procedure terminates.  False means "not reduced", not "not a consequence".
    """
    w = GenWord.coerce(w)
    # push L to the right
    l_count = 0
    flat: list[tuple[str, int]] = []
    for name, k in reversed(w.letters):
        if name == "L":
            l_count += k
            continue
        if l_count % 2 and name in ("T", "U"):
            k = -k
        flat.append((name, k))
    flat.reverse()
    if l_count % 2:
        return False
    # segments: pre S seg_1 S seg_2 ... S seg_k
    segs: list[list[int]] = [[0, 0]]
    for name, k in flat:
        if name == "S":
            for _ in range(abs(k)):
                segs.append([0, 0])
        else:
            segs[-1][0 if name == "T" else 1] += k
    pre = segs.pop(0)
    if not segs:
        return pre == [0, 0]
    segs[-1][0] += pre[0]
    segs[-1][1] += pre[1]
    # cyclic word S seg_0 S seg_1 ... S seg_{k-1}
    while segs:
        k = len(segs)
        for j in range(k):
            a, b = segs[j]
            if b or abs(a) > 1:
                continue
            if k == 1:
                continue
            nxt = (j + 1) % k
            prv = (j - 1) % k
            if a == 0:
                if k == 2:
                    return segs[nxt] == [0, 0]
                # S seg_j S vanishes; seg_prv absorbs seg_nxt
                merged = [segs[prv][0] + segs[nxt][0], segs[prv][1] + segs[nxt][1]]
                segs = [merged if i == prv else s
                        for i, s in enumerate(segs) if i not in (j, nxt)]
            else:
                if k == 2:
                    other = segs[nxt]
                    segs = [[other[0] - 2 * a, other[1]]]
                else:
                    segs[prv] = [segs[prv][0] - a, segs[prv][1]]
                    segs[nxt] = [segs[nxt][0] - a, segs[nxt][1]]
                    segs = [s for i, s in enumerate(segs) if i != j]
            break
        else:
            return False
    return False


@dataclass(frozen=True)
class SearchHit:
    word: str
    reducible: bool


@dataclass(frozen=True)
class SearchReport:
    trials: int
    max_len: int
    seed: int
    hits: tuple[SearchHit, ...]

    @property
    def candidates(self) -> list[str]:
        """Deformed identities the rewriting heuristic could not reduce."""
        return [h.word for h in self.hits if not h.reducible]


def random_relation_search(max_len: int, trials: int, seed: int) -> SearchReport:
    """Sample random words, keep those acting as the identity after deformation,
    and try to reduce each with the group relations."""
    if max_len > 20:
        raise ValueError("max_len is limited to 20")
    rng = random.Random(seed)
    hits = []
    for _ in range(trials):
        w = random_word(rng, max_len)
        if word_flip(w) != 1 or not _classical_is_identity(w):
            continue
        if word_eval(w).is_identity():
            hits.append(SearchHit(str(w), reduces_by_relations(w)))
    return SearchReport(trials, max_len, seed, tuple(hits))


__all__ = [
    "GenWord", "word_eval", "word_flip", "RELATIONS", "RelationResult", "relation_suite",
    "n_membership", "n_decomposition", "usl_cubed_check", "UslReport", "random_word",
    "reduces_by_relations", "random_relation_search", "SearchHit", "SearchReport",
]

"""Root-system combinatorics for the split types A, B, C, D and G2.

Everything is generated from an explicit integer Cartan matrix; there are no
stored root tables. Matrix convention: cartan[i][j] = <alpha_i, alpha_j^vee>,
so a root with coefficient vector c pairs with the j-th simple coroot as
sum_i c[i] * cartan[i][j]. Simple roots follow Bourbaki numbering.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import InvariantViolation, ValidationError

# A root is its integer coefficient vector over the simple roots.
Root = tuple[int, ...]
RationalVector = tuple[Fraction, ...]
LeviSubset = frozenset[int]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "G": 2}
_DUAL_FAMILY = {"A": "A", "B": "C", "C": "B", "D": "D", "G": "G"}


@dataclass(frozen=True)
class CartanSpec:
    """A Cartan family letter plus rank, e.g. ("C", 2) for Sp(4)."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _MIN_RANK:
            raise ValidationError(
                f"unknown family {self.family!r}; expected one of A, B, C, D, G",
                field="family",
            )
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValidationError("rank must be a positive integer", field="rank")
        if self.family == "G" and self.rank != 2:
            raise ValidationError("family G exists only at rank 2", field="rank")
        if self.rank < _MIN_RANK[self.family]:
            raise ValidationError(
                f"family {self.family} requires rank >= {_MIN_RANK[self.family]}",
                field="rank",
            )

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(spec: CartanSpec) -> tuple[tuple[int, ...], ...]:
    """Bourbaki Cartan matrix of the given type."""
    n = spec.rank
    if spec.family == "G":
        return ((2, -1), (-3, 2))
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i: int, j: int, a: int = -1, b: int = -1) -> None:
        m[i][j] = a
        m[j][i] = b

    if spec.family == "D":
        for i in range(n - 3):
            join(i, i + 1)
        join(n - 3, n - 2)
        join(n - 3, n - 1)
    else:
        for i in range(n - 2):
            join(i, i + 1)
        if spec.family == "A":
            if n >= 2:
                join(n - 2, n - 1)
        elif spec.family == "B":
            # alpha_n is the short root: <alpha_{n-1}, alpha_n^vee> = -2
            join(n - 2, n - 1, -2, -1)
        else:  # C
            join(n - 2, n - 1, -1, -2)
    return tuple(tuple(row) for row in m)


def root_sort_key(root: Root) -> tuple:
    """Canonical enumeration order: height ascending, then coefficients
    descending lexicographically (so alpha_1 precedes alpha_2)."""
    return (sum(root), tuple(-c for c in root))


def _pairing(cartan: tuple[tuple[int, ...], ...], root: Root, j: int) -> int:
    return sum(root[i] * cartan[i][j] for i in range(len(root)))


def _generate_positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[Root, ...]:
    """Closure under root strings, walking up one height level at a time."""
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        grown: list[Root] = []
        for beta in frontier:
            for i in range(n):
                # q = p - <beta, alpha_i^vee> with p the depth of the string
                depth = 0
                gamma = list(beta)
                while True:
                    gamma[i] -= 1
                    if gamma[i] < 0 or tuple(gamma) not in known:
                        break
                    depth += 1
                if depth - _pairing(cartan, beta, i) > 0:
                    up = list(beta)
                    up[i] += 1
                    candidate = tuple(up)
                    if candidate not in known:
                        known.add(candidate)
                        grown.append(candidate)
        frontier = grown
    return tuple(sorted(known, key=root_sort_key))


@dataclass(frozen=True)
class RootDatum:
    """Cartan matrix with its generated positive-root list.

    For dual data of B/C the index labels stay aligned with the original
    group's simple roots (the transpose convention), which is again the
    Bourbaki order of the swapped family.
    """

    spec: CartanSpec
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if len(self.cartan) != self.spec.rank:
            raise ValidationError("Cartan matrix size does not match rank")
        object.__setattr__(self, "positive_roots", _generate_positive_roots(self.cartan))

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)


@lru_cache(maxsize=None)
def build_root_datum(spec: CartanSpec) -> RootDatum:
    return RootDatum(spec, cartan_matrix(spec))


@lru_cache(maxsize=None)
def dual_datum(d: RootDatum) -> RootDatum:
    """Transpose the Cartan matrix; B and C trade places, A/D/G are self-dual."""
    transposed = tuple(tuple(d.cartan[j][i] for j in range(d.rank)) for i in range(d.rank))
    return RootDatum(CartanSpec(_DUAL_FAMILY[d.spec.family], d.spec.rank), transposed)


def coroot_pairing(d: RootDatum, root: Root, j: int) -> int:
    """<root, alpha_j^vee>."""
    if len(root) != d.rank:
        raise ValidationError("root length does not match rank")
    return _pairing(d.cartan, root, j)


def diagram_pairing(root: Root, diagram: tuple[int, ...]) -> int:
    """Value of the root on the semisimple element H determined by the
    weighted diagram: sum of coefficient * diagram entry."""
    if len(root) != len(diagram):
        raise ValidationError("root and diagram lengths differ")
    return sum(c * d for c, d in zip(root, diagram))


def reflect_root(d: RootDatum, i: int, root: Root) -> Root:
    p = coroot_pairing(d, root, i)
    out = list(root)
    out[i] -= p
    return tuple(out)


def reflect_vector(d: RootDatum, i: int, vector: RationalVector) -> RationalVector:
    """Simple reflection acting on a vector of simple-root evaluations:
    v'_j = v_j - cartan[j][i] * v_i."""
    if len(vector) != d.rank:
        raise ValidationError("vector length does not match rank")
    vi = vector[i]
    return tuple(v - d.cartan[j][i] * vi for j, v in enumerate(vector))


def apply_word_root(d: RootDatum, word: tuple[int, ...], root: Root) -> Root:
    for i in word:
        root = reflect_root(d, i, root)
    return root


def apply_word_vector(d: RootDatum, word: tuple[int, ...], vector: RationalVector) -> RationalVector:
    for i in word:
        vector = reflect_vector(d, i, vector)
    return vector


def dominantize(d: RootDatum, vector: RationalVector) -> tuple[RationalVector, tuple[int, ...]]:
    """Walk the vector into the closed dominant chamber (all entries >= 0).

    Returns (dominant vector, word) with apply_word_vector(d, word, input)
    equal to the output. Each step strictly reduces the number of positive
    roots evaluating negatively, so length <= number of positive roots.
    """
    current = tuple(Fraction(v) for v in vector)
    if len(current) != d.rank:
        raise ValidationError("vector length does not match rank")
    word: list[int] = []
    bound = len(d.positive_roots)
    while True:
        negative = [i for i, v in enumerate(current) if v < 0]
        if not negative:
            return current, tuple(word)
        if len(word) > bound:
            raise InvariantViolation("dominantization exceeded the positive-root bound")
        i = negative[0]
        current = reflect_vector(d, i, current)
        word.append(i)


def validate_levi(d: RootDatum, theta: LeviSubset) -> LeviSubset:
    theta = frozenset(theta)
    for i in theta:
        if not isinstance(i, int) or not 0 <= i < d.rank:
            raise ValidationError(f"Levi index {i} outside 0..{d.rank - 1}", field="levi")
    return theta


def levi_and_nilradical(d: RootDatum, theta: LeviSubset) -> tuple[tuple[Root, ...], tuple[Root, ...]]:
    """Split positive roots into those supported on theta and the rest."""
    theta = validate_levi(d, theta)
    levi: list[Root] = []
    nilradical: list[Root] = []
    for root in d.positive_roots:
        if all(c == 0 or i in theta for i, c in enumerate(root)):
            levi.append(root)
        else:
            nilradical.append(root)
    return tuple(levi), tuple(nilradical)


def format_root(root: Root) -> str:
    """Human form, e.g. "a1 + 2 a2"."""
    terms = []
    for i, c in enumerate(root):
        if c == 0:
            continue
        name = f"a{i + 1}"
        if c == 1:
            terms.append(name)
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{c} {name}")
    return " + ".join(terms) if terms else "0"


def solve_linear_fractions(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square system exactly by Gaussian elimination."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise InvariantViolation("singular linear system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def evaluation_exponents(d: RootDatum, character_exps: RationalVector) -> RationalVector:
    """Satake evaluation exponents of the twist with the given character
    exponents: e_i = sum_j cartan[i][j] * c_j."""
    if len(character_exps) != d.rank:
        raise ValidationError("exponent vector length does not match rank")
    return tuple(
        sum((Fraction(c) * d.cartan[i][j] for j, c in enumerate(character_exps)), Fraction(0))
        for i in range(d.rank)
    )


def character_exponents(d: RootDatum, evaluation_exps: RationalVector) -> RationalVector:
    """Inverse of evaluation_exponents (the Cartan matrix is invertible)."""
    rows = [[Fraction(d.cartan[i][j]) for j in range(d.rank)] for i in range(d.rank)]
    return tuple(solve_linear_fractions(rows, [Fraction(v) for v in evaluation_exps]))

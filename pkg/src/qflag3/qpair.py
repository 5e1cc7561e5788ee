"""Dual-pairing engine for the quantum coordinate algebra of SU_q(3).

A closed family of twelve functionals is represented by 3x3 evaluation
matrices on the generators u_ij together with finite coproduct expansions
inside the family.  From these we obtain pairings against words in the u_ij,
coset maps onto the six-dimensional cotangent space, the two-fold coproduct
map omega, and the right module action on cotangent vectors.
"""

from __future__ import annotations

from functools import lru_cache

from . import rootdata
from .ncpoly import Alphabet, NCPolynomial
from .scalar import Coefficient, ONE, ZERO

U_ALPHABET = Alphabet(tuple("u%d%d" % (i, j) for i in (1, 2, 3) for j in (1, 2, 3)))

# cotangent basis slots, in the rank order of the exterior alphabet
SLOT_LETTERS = rootdata.LETTERS
SLOT_DUALS = ("F_a2", "F_a12", "F_a1", "E_a2", "E_a12", "E_a1")


def u_index(i: int, j: int) -> int:
    return (i - 1) * 3 + (j - 1)


def u_word(*pairs):
    return tuple(u_index(i, j) for i, j in pairs)


def u_monomial(*pairs, coeff=ONE) -> NCPolynomial:
    return NCPolynomial.monomial(U_ALPHABET, u_word(*pairs), coeff)


def one_word() -> NCPolynomial:
    return NCPolynomial.monomial(U_ALPHABET, ())


class Functional:
    """A member of the closed dual family: evaluation matrix plus coproduct."""

    __slots__ = ("name", "eval", "coproduct", "counit")

    def __init__(self, name, eval_matrix, coproduct, counit):
        self.name = name
        self.eval = eval_matrix          # 3x3 nested tuple of Coefficient
        self.coproduct = coproduct       # tuple of (left name, right name, scale)
        self.counit = counit


def _matmul(a, b):
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(3)), ZERO) for j in range(3))
        for i in range(3))


def _matscale(a, c):
    return tuple(tuple(entry * c for entry in row) for row in a)


def _matadd(a, b):
    return tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(a, b))


def _single(i, j, value):
    return tuple(
        tuple(value if (r, c) == (i - 1, j - 1) else ZERO for c in range(3))
        for r in range(3))


def _diag(*values):
    return tuple(
        tuple(values[r] if r == c else ZERO for c in range(3)) for r in range(3))


@lru_cache(maxsize=None)
def functional_table():
    """The twelve-member closed family, with composites built by matrix products."""
    q = Coefficient.q_power
    nu = Coefficient.nu()

    # primitive pairing data for the generators of the enveloping algebra
    E1 = _single(2, 1, ONE)
    E2 = _single(3, 2, ONE)
    F1 = _single(1, 2, ONE)
    F2 = _single(2, 3, ONE)
    K1 = _diag(q(-1), q(1), ONE)
    K2 = _diag(ONE, q(-1), q(1))
    IDENT = _diag(ONE, ONE, ONE)

    K1K2 = _matmul(K1, K2)
    E_a12 = _matadd(_matmul(E2, E1), _matscale(_matmul(E1, E2), -q(-1)))
    F_a1 = _matmul(K1, F1)
    F_a2 = _matmul(K2, F2)
    bracket = _matadd(_matmul(F1, F2), _matscale(_matmul(F2, F1), -q(-1)))
    F_a12 = _matscale(_matmul(K1K2, bracket), q(-1))
    E_a2K1 = _matmul(E2, K1)
    F_a2K1 = _matmul(F_a2, K1)

    table = {}

    def define(name, matrix, coproduct, grouplike=False):
        table[name] = Functional(name, matrix, tuple(coproduct),
                                 ONE if grouplike else ZERO)

    define("eps", IDENT, [("eps", "eps", ONE)], grouplike=True)
    define("K1", K1, [("K1", "K1", ONE)], grouplike=True)
    define("K2", K2, [("K2", "K2", ONE)], grouplike=True)
    define("K1K2", K1K2, [("K1K2", "K1K2", ONE)], grouplike=True)
    define("E_a1", E1, [("E_a1", "K1", ONE), ("eps", "E_a1", ONE)])
    define("E_a2", E2, [("E_a2", "K2", ONE), ("eps", "E_a2", ONE)])
    define("E_a2K1", E_a2K1, [("E_a2K1", "K1K2", ONE), ("K1", "E_a2K1", ONE)])
    define("E_a12", E_a12, [("E_a12", "K1K2", ONE),
                            ("E_a1", "E_a2K1", q(-1) * nu),
                            ("eps", "E_a12", ONE)])
    define("F_a1", F_a1, [("F_a1", "K1", ONE), ("eps", "F_a1", ONE)])
    define("F_a2", F_a2, [("F_a2", "K2", ONE), ("eps", "F_a2", ONE)])
    define("F_a2K1", F_a2K1, [("F_a2K1", "K1K2", ONE), ("K1", "F_a2K1", ONE)])
    define("F_a12", F_a12, [("F_a12", "K1K2", ONE),
                            ("F_a1", "F_a2K1", nu),
                            ("eps", "F_a12", ONE)])
    return table


# -- pairing ------------------------------------------------------------------

_pair_cache = {}
_pair2_cache = {}
_prod_eval_cache = {}


def _pair_word(name, word) -> Coefficient:
    key = (name, word)
    hit = _pair_cache.get(key)
    if hit is not None:
        return hit
    table = functional_table()
    if not word:
        value = table[name].counit
    else:
        i, j = divmod(word[0], 3)
        rest = word[1:]
        value = ZERO
        for left, right, scale in table[name].coproduct:
            entry = table[left].eval[i][j]
            if entry.is_zero():
                continue
            tail = _pair_word(right, rest)
            if tail.is_zero():
                continue
            value = value + scale * entry * tail
    _pair_cache[key] = value
    return value


def pair(name: str, poly: NCPolynomial) -> Coefficient:
    """Dual pairing of the named functional against a polynomial in the u_ij."""
    total = ZERO
    for word, coeff in poly.terms.items():
        value = _pair_word(name, word)
        if not value.is_zero():
            total = total + coeff * value
    return total


def _prod_eval(x, y):
    key = (x, y)
    hit = _prod_eval_cache.get(key)
    if hit is None:
        table = functional_table()
        hit = _matmul(table[x].eval, table[y].eval)
        _prod_eval_cache[key] = hit
    return hit


def _pair2_word(x, y, word) -> Coefficient:
    """Pairing of the product functional x*y against a word.

    Equals the sum over all intermediate index tuples of the matrix coproduct
    of the word, paired with x on the left leg and y on the right leg.
    """
    key = (x, y, word)
    hit = _pair2_cache.get(key)
    if hit is not None:
        return hit
    table = functional_table()
    if not word:
        value = table[x].counit * table[y].counit
    else:
        i, j = divmod(word[0], 3)
        rest = word[1:]
        value = ZERO
        for lx, rx, sx in table[x].coproduct:
            for ly, ry, sy in table[y].coproduct:
                entry = _prod_eval(lx, ly)[i][j]
                if entry.is_zero():
                    continue
                tail = _pair2_word(rx, ry, rest)
                if tail.is_zero():
                    continue
                value = value + sx * sy * entry * tail
    _pair2_cache[key] = value
    return value


# -- cotangent vectors ----------------------------------------------------------


class CotangentVector:
    """Element of the 6-dimensional cotangent space in the basis
    (f_a2, f_a12, f_a1, e_a2, e_a12, e_a1)."""

    __slots__ = ("components",)

    def __init__(self, components=None):
        self.components = tuple(components) if components is not None else (ZERO,) * 6

    @staticmethod
    def basis(letter: str) -> "CotangentVector":
        idx = SLOT_LETTERS.index(letter)
        return CotangentVector(tuple(ONE if k == idx else ZERO for k in range(6)))

    def __add__(self, other):
        return CotangentVector(tuple(a + b for a, b in
                                     zip(self.components, other.components)))

    def __sub__(self, other):
        return CotangentVector(tuple(a - b for a, b in
                                     zip(self.components, other.components)))

    def scale(self, coeff):
        return CotangentVector(tuple(a * coeff for a in self.components))

    def __eq__(self, other):
        return isinstance(other, CotangentVector) and self.components == other.components

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def support(self):
        return tuple(SLOT_LETTERS[k] for k, c in enumerate(self.components)
                     if not c.is_zero())

    def render(self) -> str:
        parts = []
        for letter, coeff in zip(SLOT_LETTERS, self.components):
            if coeff.is_zero():
                continue
            text = coeff.render()
            if " " in text and "/" not in text:
                text = "(%s)" % text
            parts.append("%s*%s" % (text, letter))
        if not parts:
            return "0"
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out

    def __repr__(self):
        return "CotangentVector(%s)" % self.render()


def coset(poly: NCPolynomial) -> CotangentVector:
    """Coset of a u-polynomial in the cotangent space.

    The component on each basis vector is the pairing with its dual
    functional; constants die automatically since all six vanish on 1.
    """
    return CotangentVector(tuple(pair(dual, poly) for dual in SLOT_DUALS))


def counit(poly: NCPolynomial) -> Coefficient:
    """Counit: the product of Kronecker deltas over each word's letters."""
    total = ZERO
    for word, coeff in poly.terms.items():
        if all(divmod(letter, 3)[0] == divmod(letter, 3)[1] for letter in word):
            total = total + coeff
    return total


def plus_part(poly: NCPolynomial) -> NCPolynomial:
    """Counit correction y - eps(y) 1."""
    return poly - NCPolynomial.monomial(U_ALPHABET, (), counit(poly))


def omega(poly: NCPolynomial):
    """The degree-two coset map: a 6x6 matrix over Coefficient whose (r, c)
    entry is the pairing of the product of the r-th and c-th dual functionals
    against the input (left tensor leg first)."""
    if not counit(poly).is_zero():
        raise ValueError("omega requires a counit-zero input; subtract eps(y) first")
    matrix = [[ZERO] * 6 for _ in range(6)]
    for word, coeff in poly.terms.items():
        for r, x in enumerate(SLOT_DUALS):
            for c, y in enumerate(SLOT_DUALS):
                value = _pair2_word(x, y, word)
                if not value.is_zero():
                    matrix[r][c] = matrix[r][c] + coeff * value
    return tuple(tuple(row) for row in matrix)


def omega_by_expansion(poly: NCPolynomial):
    """Reference implementation of omega by explicit expansion of the matrix
    coproduct over all intermediate index tuples (for cross-checks)."""
    if not counit(poly).is_zero():
        raise ValueError("omega requires a counit-zero input")
    matrix = [[ZERO] * 6 for _ in range(6)]
    for word, coeff in poly.terms.items():
        rows = [divmod(letter, 3)[0] + 1 for letter in word]
        cols = [divmod(letter, 3)[1] + 1 for letter in word]
        tuples = [()]
        for _ in word:
            tuples = [t + (a,) for t in tuples for a in (1, 2, 3)]
        for mids in tuples:
            left = coset(u_monomial(*zip(rows, mids)))
            if left.is_zero():
                continue
            right = coset(u_monomial(*zip(mids, cols)))
            if right.is_zero():
                continue
            for r, a in enumerate(left.components):
                if a.is_zero():
                    continue
                for c, b in enumerate(right.components):
                    if not b.is_zero():
                        matrix[r][c] = matrix[r][c] + coeff * a * b
    return tuple(tuple(row) for row in matrix)


def omega_render(matrix) -> str:
    parts = []
    for r in range(6):
        for c in range(6):
            if not matrix[r][c].is_zero():
                text = matrix[r][c].render()
                if " " in text and "/" not in text:
                    text = "(%s)" % text
                parts.append("%s*%s(x)%s" % (text, SLOT_LETTERS[r], SLOT_LETTERS[c]))
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


# -- right module action ---------------------------------------------------------

_F_A2, _F_A12, _F_A1, _E_A2, _E_A12, _E_A1 = range(6)


@lru_cache(maxsize=None)
def _letter_action(i: int, j: int):
    """Sparse action of u_ij on the cotangent basis: list of
    (source slot, target slot, Coefficient), per the right module structure."""
    q = Coefficient.q_power
    nu = Coefficient.nu()
    if i == j:
        eps_k = rootdata.EPSILON[i - 1]
        return tuple(
            (slot, slot, q(-rootdata.inner_product(rootdata.LETTER_ROOTS[slot], eps_k)))
            for slot in range(6))
    if (i, j) == (3, 2):
        return ((_E_A1, _E_A12, nu),)
    if (i, j) == (2, 3):
        return ((_F_A1, _F_A12, q(-1) * nu),)
    return ()


def act_letter(vec: CotangentVector, i: int, j: int) -> CotangentVector:
    out = [ZERO] * 6
    for src, dst, coeff in _letter_action(i, j):
        value = vec.components[src]
        if not value.is_zero():
            out[dst] = out[dst] + value * coeff
    return CotangentVector(out)


def right_act(vec: CotangentVector, poly: NCPolynomial) -> CotangentVector:
    """Right action of a u-polynomial, letter by letter, extended linearly."""
    total = CotangentVector()
    for word, coeff in poly.terms.items():
        current = vec
        for letter in word:
            i, j = divmod(letter, 3)
            current = act_letter(current, i + 1, j + 1)
            if current.is_zero():
                break
        total = total + current.scale(coeff)
    return total


def right_act_deg2(tensor, poly: NCPolynomial):
    """Diagonal action on V1 (x) V1 through the coproduct of each word."""
    total = [[ZERO] * 6 for _ in range(6)]
    for word, coeff in poly.terms.items():
        current = tensor
        for letter in word:
            i, j = divmod(letter, 3)
            i, j = i + 1, j + 1
            updated = [[ZERO] * 6 for _ in range(6)]
            for a in (1, 2, 3):
                left = _letter_action(i, a)
                right = _letter_action(a, j)
                if not left or not right:
                    continue
                for r_src, r_dst, r_coeff in left:
                    for c_src, c_dst, c_coeff in right:
                        value = current[r_src][c_src]
                        if not value.is_zero():
                            updated[r_dst][c_dst] = (
                                updated[r_dst][c_dst] + value * r_coeff * c_coeff)
            current = updated
        for r in range(6):
            for c in range(6):
                if not current[r][c].is_zero():
                    total[r][c] = total[r][c] + coeff * current[r][c]
    return tuple(tuple(row) for row in total)


# -- antipode and flag generators --------------------------------------------------


def antipode_word(i: int, j: int) -> NCPolynomial:
    """Quadratic expansion of S(u_ij): (-q)^(i-j) (u_km u_ln - q u_kn u_lm),
    with {k, l} and {m, n} the complements of {j} and {i} in increasing order."""
    k, l = sorted({1, 2, 3} - {j})
    m, n = sorted({1, 2, 3} - {i})
    sign = Coefficient.from_rational((-1) ** (i - j)) * Coefficient.q_power(i - j)
    first = u_monomial((k, m), (l, n), coeff=sign)
    second = u_monomial((k, n), (l, m), coeff=sign * (-Coefficient.q_power(1)))
    return first + second


def flag_generator(p: int, a: int, b: int) -> NCPolynomial:
    """The flag-algebra generator z^{alpha_p}_{ab} as a u-polynomial."""
    if p not in (1, 2):
        raise ValueError("p must be 1 or 2")
    col = 1 if p == 1 else 3
    return u_monomial((a, col)) * antipode_word(col, b)


def all_flag_generators():
    """The eighteen generators z^{alpha_p}_{ab}, keyed (p, a, b)."""
    return {(p, a, b): flag_generator(p, a, b)
            for p in (1, 2) for a in (1, 2, 3) for b in (1, 2, 3)}


def u_poly_weight(poly: NCPolynomial):
    """Common fundamental-weight grading of all words (None if mixed)."""
    weights = set()
    for word in poly.terms:
        total = (0, 0)
        for letter in word:
            j = divmod(letter, 3)[1] + 1
            w = rootdata.column_weight(j)
            total = (total[0] + w[0], total[1] + w[1])
        weights.add(total)
    if len(weights) > 1:
        return None
    return weights.pop() if weights else (0, 0)

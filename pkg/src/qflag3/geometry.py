"""Geometric verification layer: the census of covariant first-order
almost-complex structures, bigrading and integrability checks, dimension
counts for covariant connections, and the Kaehler obstruction computations.
"""

from __future__ import annotations

from functools import lru_cache

from . import flagext, qpair, rootdata
from .ncpoly import NCPolynomial
from .report import VerificationReport
from .scalar import Coefficient, ONE, ZERO

LETTERS = rootdata.LETTERS
E_LETTERS = ("e_a2", "e_a12", "e_a1")
F_LETTERS = ("f_a2", "f_a12", "f_a1")


class Foacs:
    """A star-compatible splitting of the six cotangent letters into a
    holomorphic and an anti-holomorphic half."""

    __slots__ = ("holo", "anti")

    def __init__(self, holo):
        self.holo = frozenset(holo)
        self.anti = frozenset(LETTERS) - self.holo

    def opposite(self):
        return Foacs(self.anti)

    def key(self):
        return tuple(sorted(self.holo))

    def __eq__(self, other):
        return isinstance(other, Foacs) and self.holo == other.holo

    def __hash__(self):
        return hash(self.holo)

    def render(self):
        order = [l for l in LETTERS if l in self.holo]
        return "H={%s}" % ",".join(order)


def _star_letter(letter: str) -> str:
    return ("f" + letter[1:]) if letter.startswith("e") else ("e" + letter[1:])


def satisfies_star_swap(holo) -> bool:
    """e_gamma holomorphic iff f_gamma anti-holomorphic, for every root."""
    return all((letter in holo) != (_star_letter(letter) in holo) for letter in LETTERS)


def _span_closed_under_flag_action(letters) -> bool:
    indices = {LETTERS.index(l) for l in letters}
    for letter in letters:
        vec = qpair.CotangentVector.basis(letter)
        for z in qpair.all_flag_generators().values():
            moved = qpair.right_act(vec, z)
            if any(not c.is_zero() and k not in indices
                   for k, c in enumerate(moved.components)):
                return False
    return True


@lru_cache(maxsize=None)
def enumerate_foacs():
    """All 64 letter assignments, filtered by the star-swap condition and
    closure of both halves under the right action of the 18 flag generators."""
    survivors = []
    for bits in range(64):
        holo = frozenset(LETTERS[k] for k in range(6) if bits & (1 << k))
        if not satisfies_star_swap(holo):
            continue
        anti = frozenset(LETTERS) - holo
        if _span_closed_under_flag_action(holo) and _span_closed_under_flag_action(anti):
            survivors.append(Foacs(holo))
    survivors.sort(key=lambda s: s.key())
    return tuple(survivors)


STRUCTURE_I = Foacs(frozenset(E_LETTERS))
STRUCTURE_II = Foacs(frozenset(("f_a1", "f_a12", "e_a2")))


def bidegree_of_word(word, foacs: Foacs):
    holo = sum(1 for i in word if LETTERS[i] in foacs.holo)
    return (holo, len(word) - holo)


def check_bigrading(foacs: Foacs, report=None) -> VerificationReport:
    """Assign bidegree (1,0)/(0,1) by the splitting and verify that every
    relation is bihomogeneous; tabulate irreducible-word counts by bidegree."""
    algebra = flagext.build_relations()
    report = report if report is not None else VerificationReport("bigrading")
    tag = foacs.render()
    offenders = []
    for rule in algebra.system.rules:
        lhs_deg = bidegree_of_word(rule.lhs, foacs)
        for word in rule.rhs.terms:
            if bidegree_of_word(word, foacs) != lhs_deg:
                offenders.append(algebra.alphabet.render_word(rule.lhs))
    report.add("bihomogeneous[%s]" % tag, "Cor 5.3",
               "all 21 rules bihomogeneous",
               "all 21 rules bihomogeneous" if not offenders
               else "offending rules: %s" % ", ".join(offenders))
    table = {}
    for k in range(7):
        for word in algebra.system.irreducible_words(k):
            table[bidegree_of_word(word, foacs)] = table.get(
                bidegree_of_word(word, foacs), 0) + 1
    binom = [1, 3, 3, 1]
    expected = {(a, b): binom[a] * binom[b] for a in range(4) for b in range(4)}
    report.add("bidegree-dims[%s]" % tag, "Cor 5.3",
               "dim V^(a,b) = C(3,a)C(3,b)",
               "dim V^(a,b) = C(3,a)C(3,b)" if table == expected
               else "deviating table: %s" % sorted(table.items()))
    return report


def integrability_data(foacs: Foacs):
    """Extra degree-one ideal generators for the (0,1)-side of the splitting:
    the flag generators whose nonzero coset lies in the holomorphic span."""
    extras = {}
    for key, z in qpair.all_flag_generators().items():
        vec = qpair.coset(z)
        support = set(vec.support())
        if support and support <= foacs.holo:
            extras[key] = vec
    return extras


def check_integrability(foacs: Foacs, report=None) -> VerificationReport:
    """Two sub-checks: the anti-holomorphic letters generate a subalgebra of
    Hilbert series [1,3,3,1], and the coset map applied twice to each extra
    ideal generator has no component in the anti-holomorphic square, so the
    extended ideal adds no relations in bidegree (0,2)."""
    algebra = flagext.build_relations()
    report = report if report is not None else VerificationReport("integrability")
    tag = foacs.render()

    anti_indices = {LETTERS.index(l) for l in foacs.anti}
    dims = [sum(1 for w in algebra.system.irreducible_words(k)
                if set(w) <= anti_indices) for k in range(4)]
    report.add("antiholo-dims[%s]" % tag, "Prop 5.4",
               "[1, 3, 3, 1]", str(dims))

    extras = integrability_data(foacs)
    pivots = {}
    for vec in extras.values():
        row = {k: c for k, c in enumerate(vec.components) if not c.is_zero()}
        flagext._insert_pivot(row, pivots)
    report.add("extra-generators-span[%s]" % tag, "Prop 5.4",
               "cosets of extra generators span the holomorphic side (rank 3)",
               "rank %d from %s" % (len(pivots), sorted(
                   "z%d_%d%d" % key for key in extras)),
               passed=len(pivots) == 3)

    anti_slots = sorted(anti_indices)
    for key in sorted(extras):
        matrix = qpair.omega(qpair.flag_generator(*key))
        block_nonzero = [
            (LETTERS[r], LETTERS[c])
            for r in anti_slots for c in anti_slots
            if not matrix[r][c].is_zero()
        ]
        report.add("omega-antiholo-block[%s]:z%d_%d%d" % ((tag,) + key),
                   "Prop 5.4",
                   "0", "0" if not block_nonzero else str(block_nonzero))
    return report


# -- connections -------------------------------------------------------------


def _generator_weights():
    return [rootdata.generator_weight(l) for l in LETTERS]


def _wedge_vector(algebra, i, j, basis_index):
    nf = algebra.system.normal_form(algebra.monomial((i, j)))
    return {basis_index[w]: c for w, c in nf.terms.items()}


def _block_rank(rows):
    pivots = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in pivots:
                inv = row[lead]
                pivots[lead] = {j: c / inv for j, c in row.items()}
                rank += 1
                break
            factor = row[lead]
            for j, c in pivots[lead].items():
                new = row.get(j, ZERO) - factor * c
                if new.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = new
    return rank


def connection_space_dims():
    """(total, torsion-free) dimensions of the affine spaces of covariant
    connections, by weight multiplicity counting and exact kernel ranks."""
    algebra = flagext.build_relations()
    weights = _generator_weights()
    tensor_weight = {}
    for i in range(6):
        for j in range(6):
            tensor_weight[(i, j)] = rootdata.add(weights[i], weights[j])
    total = sum(1 for w in tensor_weight.values() for g in weights if w == g)

    basis_index = {w: k for k, w in enumerate(algebra.system.irreducible_words(2))}
    blocks = {}
    for pair, w in tensor_weight.items():
        blocks.setdefault(w, []).append(pair)
    kernel_total = 0
    torsion_free = 0
    for w, pairs in blocks.items():
        rows = [_wedge_vector(algebra, i, j, basis_index) for (i, j) in pairs]
        kdim = len(pairs) - _block_rank(rows)
        kernel_total += kdim
        torsion_free += kdim * sum(1 for g in weights if g == w)
    return total, torsion_free, kernel_total


def connection_space_dims_oracle():
    """Independent brute-force count: the full 36 x 6 weight-matching matrix
    of candidate module maps, solving the wedge constraint per generator."""
    algebra = flagext.build_relations()
    weights = _generator_weights()
    basis_index = {w: k for k, w in enumerate(algebra.system.irreducible_words(2))}
    total = 0
    torsion_free = 0
    for g, gw in enumerate(weights):
        matching = [(i, j) for i in range(6) for j in range(6)
                    if rootdata.add(weights[i], weights[j]) == gw]
        total += len(matching)
        rows = []
        for col, (i, j) in enumerate(matching):
            vec = _wedge_vector(algebra, i, j, basis_index)
            for target, coeff in vec.items():
                rows.append((target, col, coeff))
        by_target = {}
        for target, col, coeff in rows:
            by_target.setdefault(target, {})[col] = coeff
        torsion_free += len(matching) - _block_rank(list(by_target.values()))
    return total, torsion_free


# -- coinvariant forms and the Kaehler obstruction ----------------------------------


def coinvariant_forms(degree: int):
    """All weight-zero irreducible words of the given degree."""
    algebra = flagext.build_relations()
    zero = (0, 0, 0)
    return [w for w in algebra.system.irreducible_words(degree)
            if algebra.word_weight(w) == zero]


COINVARIANT_2FORMS = (("f_a1", "e_a1"), ("f_a2", "e_a2"), ("f_a12", "e_a12"))

CENTRALITY_WITNESS_WORD = ((1, 1), (3, 2), (2, 3))  # u11 u32 u23


def _form_tensor(pair):
    i, j = LETTERS.index(pair[0]), LETTERS.index(pair[1])
    return tuple(tuple(ONE if (r, c) == (i, j) else ZERO for c in range(6))
                 for r in range(6))


def _project_to_v2(algebra, tensor) -> NCPolynomial:
    poly = NCPolynomial(algebra.alphabet, {
        (r, c): tensor[r][c] for r in range(6) for c in range(6)
        if not tensor[r][c].is_zero()})
    return algebra.system.normal_form(poly)


def centrality_report(report=None) -> VerificationReport:
    """Test v.b = eps(b) v for the three coinvariant 2-forms over all 18 flag
    generators and the cubic witness word."""
    algebra = flagext.build_relations()
    report = report if report is not None else VerificationReport("centrality")
    witness = qpair.u_monomial(*CENTRALITY_WITNESS_WORD)
    elements = [("z%d_%d%d" % key, z) for key, z in
                sorted(qpair.all_flag_generators().items())]
    elements.append(("u11.u32.u23", witness))
    for pair in COINVARIANT_2FORMS:
        tensor = _form_tensor(pair)
        base = _project_to_v2(algebra, tensor)
        failures = []
        for name, b in elements:
            acted = _project_to_v2(algebra, qpair.right_act_deg2(tensor, b))
            expected = base.scale(qpair.counit(b))
            if acted != expected:
                failures.append((name, (acted - expected).render()))
        form_name = "%s^%s" % pair
        if not failures:
            report.add("central:%s" % form_name, "Lemma 6.4",
                       "central", "central")
        else:
            report.add("central:%s" % form_name, "Lemma 6.4",
                       "central", "fails at %d elements, e.g. %s: defect %s"
                       % (len(failures), failures[0][0], failures[0][1]),
                       passed=False)
    return report


def centrality_verdicts():
    """Which coinvariant 2-forms commute with the whole flag algebra."""
    report = centrality_report()
    return {check.id.split(":", 1)[1]: check.passed for check in report.checks}


def centrality_witness_value() -> NCPolynomial:
    """The action of the witness word on f_a1 wedge e_a1 (nonzero: not central)."""
    algebra = flagext.build_relations()
    tensor = _form_tensor(("f_a1", "e_a1"))
    return _project_to_v2(
        algebra, qpair.right_act_deg2(tensor, qpair.u_monomial(*CENTRALITY_WITNESS_WORD)))


def kahler_form(c1, c2, c3) -> NCPolynomial:
    algebra = flagext.build_relations()
    word = algebra.alphabet.word
    return (algebra.monomial(word("f_a1", "e_a1"), c1)
            + algebra.monomial(word("f_a2", "e_a2"), c2)
            + algebra.monomial(word("f_a12", "e_a12"), c3))


def kahler_cube(symbolic=True, values=None):
    """The cube of the general coinvariant 2-form.

    Returns (top coefficient, divisibility-by-c1 verdict).  With symbolic
    coefficients the result is a polynomial in c1, c2, c3; otherwise the
    numeric values are substituted exactly.
    """
    algebra = flagext.build_relations()
    if symbolic:
        c1, c2, c3 = (Coefficient.symbol(s) for s in ("c1", "c2", "c3"))
    else:
        c1, c2, c3 = (Coefficient.from_rational(v) for v in values)
    form = kahler_form(c1, c2, c3)
    cube = algebra.system.normal_form(form * form * form)
    stray = [w for w in cube.terms if w != algebra.top_word]
    if stray:
        raise AssertionError("cube has terms off the top word: %s" % stray)
    top = cube.terms.get(algebra.top_word, ZERO)
    return top, top.is_divisible_by_symbol("c1")


def no_covariant_kahler(report=None) -> VerificationReport:
    """Combine centrality and nondegeneracy: the central coinvariant locus is
    c1 = 0, where the cube vanishes, so no coinvariant form is both central
    and nondegenerate."""
    report = report if report is not None else VerificationReport("kahler")
    verdicts = centrality_verdicts()
    central_dim = sum(1 for ok in verdicts.values() if ok)
    report.add("central-subspace-dim", "Lemma 6.4", "2", str(central_dim))
    report.add("central-locus", "Lemma 6.4",
               "central iff c1 = 0 (f_a1^e_a1 fails, other two pass)",
               "central iff c1 = 0 (f_a1^e_a1 fails, other two pass)"
               if verdicts == {"f_a1^e_a1": False, "f_a2^e_a2": True,
                               "f_a12^e_a12": True}
               else str(verdicts))
    top, divisible = kahler_cube(symbolic=True)
    report.add("cube-divisible-by-c1", "Lemma 6.5", "True", str(divisible))
    at_zero = top.substitute_symbols([0, 1, 1])
    report.add("cube-vanishes-on-central-locus", "Lemma 6.5",
               "0", at_zero.render())
    at_ones = top.substitute_symbols([1, 1, 1])
    report.add("nondegenerate-forms-exist-without-centrality", "Lemma 6.5",
               "nonzero", "nonzero" if not at_ones.is_zero() else "0")
    report.add("central-nondegenerate-empty", "Thm 6.6",
               "True", str(divisible and at_zero.is_zero()))
    return report

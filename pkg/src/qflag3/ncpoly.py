"""Free associative algebra over a finite ordered alphabet, with quadratic
reduction systems: normal forms, overlap-ambiguity (diamond lemma) checking,
graded bases of irreducible words, and Hilbert series.

Words are tuples of letter indices.  The monomial order is degree-first, then
left-to-right lexicographic on letter ranks; every rewrite rule must be
strictly decreasing, which certifies termination.
"""

from __future__ import annotations

from .report import Check, VerificationReport
from .scalar import Coefficient, ONE

Word = tuple


class Alphabet:
    """Ordered list of generator names; rank is the list position."""

    __slots__ = ("letters", "_index")

    def __init__(self, letters):
        letters = tuple(letters)
        if len(set(letters)) != len(letters):
            raise ValueError("letter names must be distinct")
        self.letters = letters
        self._index = {name: i for i, name in enumerate(letters)}

    def __len__(self):
        return len(self.letters)

    def rank(self, name: str) -> int:
        return self._index[name]

    def word(self, *names) -> Word:
        return tuple(self._index[name] for name in names)

    def render_word(self, word: Word) -> str:
        if not word:
            return "1"
        return ".".join(self.letters[i] for i in word)


class NCPolynomial:
    """Finite linear combination of words with Coefficient coefficients."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=None):
        self.alphabet = alphabet
        clean = {}
        if terms:
            for word, coeff in terms.items():
                if not coeff.is_zero():
                    clean[tuple(word)] = coeff
        self.terms = clean

    @staticmethod
    def zero(alphabet):
        return NCPolynomial(alphabet)

    @staticmethod
    def monomial(alphabet, word, coeff=ONE):
        return NCPolynomial(alphabet, {tuple(word): coeff})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            new = terms.get(word)
            new = coeff if new is None else new + coeff
            if new.is_zero():
                terms.pop(word, None)
            else:
                terms[word] = new
        result = NCPolynomial.__new__(NCPolynomial)
        result.alphabet, result.terms = self.alphabet, terms
        return result

    def __neg__(self):
        result = NCPolynomial.__new__(NCPolynomial)
        result.alphabet = self.alphabet
        result.terms = {w: -c for w, c in self.terms.items()}
        return result

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Concatenation product in the free algebra (no reduction)."""
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                prod = c1 * c2
                old = terms.get(word)
                new = prod if old is None else old + prod
                if new.is_zero():
                    terms.pop(word, None)
                else:
                    terms[word] = new
        result = NCPolynomial.__new__(NCPolynomial)
        result.alphabet, result.terms = self.alphabet, terms
        return result

    def scale(self, coeff: Coefficient):
        if coeff.is_zero():
            return NCPolynomial.zero(self.alphabet)
        result = NCPolynomial.__new__(NCPolynomial)
        result.alphabet = self.alphabet
        result.terms = {w: c * coeff for w, c in self.terms.items()}
        return result

    def __eq__(self, other):
        return isinstance(other, NCPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((w, hash(c)) for w, c in self.terms.items()))

    def degree(self):
        """Degree of a homogeneous polynomial (errors if mixed)."""
        degrees = {len(w) for w in self.terms}
        if len(degrees) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degrees.pop() if degrees else 0

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word, coeff in self.sorted_terms():
            text = coeff.render()
            if "/" not in text and (" " in text):
                text = "(%s)" % text
            parts.append("%s*%s" % (text, self.alphabet.render_word(word)))
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out

    def __repr__(self):
        return "NCPolynomial(%s)" % self.render()


class RewriteRule:
    """lhs -> rhs with lhs a length-2 word and rhs homogeneous of degree 2."""

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: Word, rhs: NCPolynomial):
        lhs = tuple(lhs)
        if len(lhs) != 2:
            raise ValueError("rule lhs must have length 2")
        for word in rhs.terms:
            if len(word) != 2:
                raise ValueError("rule rhs must be homogeneous of degree 2")
            if word >= lhs:
                raise ValueError(
                    "rule is not decreasing: %s occurs in the rhs of %s" % (word, lhs))
        self.lhs = lhs
        self.rhs = rhs

    def render(self, alphabet: Alphabet) -> str:
        return "%s -> %s" % (alphabet.render_word(self.lhs), self.rhs.render())


class ReductionSystem:
    """Quadratic rewrite rules with pairwise distinct left-hand sides.

    The rule invariant (every rhs word strictly precedes the lhs) makes the
    rewrite relation terminating, so normal forms always exist.
    """

    def __init__(self, alphabet: Alphabet, rules):
        self.alphabet = alphabet
        self.rules = list(rules)
        self._by_lhs = {}
        for rule in self.rules:
            if rule.lhs in self._by_lhs:
                raise ValueError("duplicate rule lhs %s" % (rule.lhs,))
            self._by_lhs[rule.lhs] = rule
        self._nf_cache = {}

    def rule_for(self, pair):
        return self._by_lhs.get(pair)

    # -- normal forms --------------------------------------------------------

    def _first_reducible(self, word):
        for i in range(len(word) - 1):
            if word[i:i + 2] in self._by_lhs:
                return i
        return None

    def _nf_word(self, word) -> dict:
        """Normal form of a single word, as a map irreducible word -> Coefficient."""
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        acc = {}
        work = [(word, ONE)]
        while work:
            current, coeff = work.pop()
            if current != word:
                hit = self._nf_cache.get(current)
                if hit is not None:
                    for w, c in hit.items():
                        new = acc.get(w)
                        new = coeff * c if new is None else new + coeff * c
                        if new.is_zero():
                            acc.pop(w, None)
                        else:
                            acc[w] = new
                    continue
            pos = self._first_reducible(current)
            if pos is None:
                old = acc.get(current)
                new = coeff if old is None else old + coeff
                if new.is_zero():
                    acc.pop(current, None)
                else:
                    acc[current] = new
                continue
            rule = self._by_lhs[current[pos:pos + 2]]
            prefix, suffix = current[:pos], current[pos + 2:]
            for rword, rcoeff in rule.rhs.terms.items():
                work.append((prefix + rword + suffix, coeff * rcoeff))
        self._nf_cache[word] = acc
        return acc

    def normal_form(self, poly: NCPolynomial) -> NCPolynomial:
        total = {}
        for word, coeff in poly.terms.items():
            for w, c in self._nf_word(word).items():
                prod = coeff * c
                old = total.get(w)
                new = prod if old is None else old + prod
                if new.is_zero():
                    total.pop(w, None)
                else:
                    total[w] = new
        return NCPolynomial(self.alphabet, total)

    def multiply(self, p: NCPolynomial, r: NCPolynomial) -> NCPolynomial:
        return self.normal_form(p * r)

    # -- diamond lemma --------------------------------------------------------

    def overlap_ambiguities(self):
        """All words abc such that ab and bc are both rule left-hand sides."""
        ambiguities = []
        for left in self.rules:
            a, b = left.lhs
            for right in self.rules:
                if right.lhs[0] == b:
                    ambiguities.append(((a, b, right.lhs[1]), left, right))
        ambiguities.sort(key=lambda item: item[0])
        return ambiguities

    def resolve_ambiguity(self, triple, left, right):
        """Normal forms after reducing the left pair first and the right pair first."""
        a, b, c = triple
        tail = NCPolynomial.monomial(self.alphabet, (c,))
        head = NCPolynomial.monomial(self.alphabet, (a,))
        via_left = self.normal_form(left.rhs * tail)
        via_right = self.normal_form(head * right.rhs)
        return via_left, via_right

    def confluence_check(self, citation="") -> VerificationReport:
        checks = []
        for triple, left, right in self.overlap_ambiguities():
            via_left, via_right = self.resolve_ambiguity(triple, left, right)
            checks.append(Check(
                id="overlap:%s" % self.alphabet.render_word(triple),
                citation=citation,
                expected="both reduction orders agree",
                actual="agree: %s" % via_left.render() if via_left == via_right
                else "left: %s ; right: %s" % (via_left.render(), via_right.render()),
                passed=via_left == via_right,
            ))
        return VerificationReport("confluence", checks)

    # -- graded bases ----------------------------------------------------------

    def irreducible_words(self, degree: int):
        """All degree-k words containing no rule lhs, in lexicographic order."""
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        n = len(self.alphabet)
        words = [()]
        for _ in range(degree):
            extended = []
            for word in words:
                for letter in range(n):
                    if word and (word[-1], letter) in self._by_lhs:
                        continue
                    extended.append(word + (letter,))
            words = extended
        return words

    def hilbert_series(self, max_degree: int):
        return [len(self.irreducible_words(k)) for k in range(max_degree + 1)]

    def dump_rules(self, header=None):
        lines = [] if header is None else [header]
        lines.extend(rule.render(self.alphabet) for rule in self.rules)
        return "\n".join(lines)


def quotient_dimension_by_elimination(system: ReductionSystem, degree: int) -> int:
    """Brute-force oracle for dim of the degree-k quotient.

    Spans the two-sided ideal slice u*(lhs - rhs)*v over all words u, v with
    |u| + |v| = k - 2 inside the full 6^k word basis and Gaussian-eliminates,
    independently of the rewrite engine.
    """
    n = len(system.alphabet)
    if degree < 2:
        return n ** degree

    all_words = [()]
    for _ in range(degree):
        all_words = [w + (letter,) for w in all_words for letter in range(n)]
    col = {w: i for i, w in enumerate(all_words)}

    def pad_words(length):
        out = [()]
        for _ in range(length):
            out = [w + (letter,) for w in out for letter in range(n)]
        return out

    rows = []
    for rule in system.rules:
        relation = [(rule.lhs, ONE)] + [(w, -c) for w, c in rule.rhs.terms.items()]
        for left_len in range(degree - 1):
            for u in pad_words(left_len):
                for v in pad_words(degree - 2 - left_len):
                    rows.append({col[u + w + v]: c for w, c in relation})

    # sparse row reduction over the exact coefficient field
    pivots = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in pivots:
                inv = row[lead]
                row = {j: c / inv for j, c in row.items()}
                pivots[lead] = row
                rank += 1
                break
            factor = row[lead]
            for j, c in pivots[lead].items():
                new = row.get(j, Coefficient.zero()) - factor * c
                if new.is_zero():
                    row.pop(j, None)
                else:
                    row[j] = new
        # empty row: linearly dependent, nothing to do
    return n ** degree - rank

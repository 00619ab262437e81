# Copyright 2026 The orderfinding authors.
#
# For a full list of individual contributors, please see the commit history.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Product operators over {I, Z} strings and temporal labeling preparation."""
import itertools
import logging
import random
from collections import Counter

import numpy as np
from scipy.linalg import hadamard

from orderfinding.exceptions import SearchExhausted
from orderfinding.gates import ControlledNot, NotGate
from orderfinding.native import NativeGates, NativeSequence, TIME_ORDER

LOGGER = logging.getLogger(__name__)

SPIN_COUNT = 5

# Tokens a preparation sequence may use.
_PREP_GATES = NativeGates({ControlledNot.token: ControlledNot, NotGate.token: NotGate})


class ZTerm:
    """Signed tensor string over {I, Z}, such as -IZIZI.

    Position k of the pattern belongs to spin k + 1.
    """

    def __init__(self, pattern, sign=1):
        """Initialize.

        :raises: ValueError on a bad pattern or sign.
        :param pattern: String over "I" and "Z".
        :type pattern: str
        :param sign: +1 or -1.
        :type sign: int
        """
        if not pattern or set(pattern) - {"I", "Z"}:
            raise ValueError("Invalid product operator pattern {!r}".format(pattern))
        if sign not in (1, -1):
            raise ValueError("Sign must be +1 or -1, got {!r}".format(sign))
        self.pattern = pattern
        self.sign = sign

    @classmethod
    def parse(cls, text):
        """Parse "+ZZIII", "-IIZII" or "IZIII".

        :rtype: :obj:`ZTerm`
        """
        text = text.strip()
        sign = -1 if text.startswith("-") else 1
        return cls(text.lstrip("+-"), sign)

    @classmethod
    def from_support(cls, support, spin_count=SPIN_COUNT, sign=1):
        """Build from the set of spins (1-based) carrying Z.

        :rtype: :obj:`ZTerm`
        """
        return cls("".join("Z" if spin in support else "I"
                           for spin in range(1, spin_count + 1)), sign)

    def support(self):
        """Spins carrying Z, 1-based.

        :rtype: frozenset
        """
        return frozenset(index + 1 for index, char in enumerate(self.pattern) if char == "Z")

    def __eq__(self, other):
        return isinstance(other, ZTerm) and (self.pattern, self.sign) == (other.pattern,
                                                                         other.sign)

    def __hash__(self):
        return hash((self.pattern, self.sign))

    def __str__(self):
        return "{}{}".format("+" if self.sign > 0 else "-", self.pattern)

    def __repr__(self):
        return "ZTerm({!r})".format(str(self))


class ZTermSum:
    """Integer weighted sum of {I, Z} strings. The identity string is never stored."""

    def __init__(self, coefficients=None, spin_count=SPIN_COUNT):
        """Initialize.

        :param coefficients: Pattern to integer coefficient.
        :type coefficients: dict
        :param spin_count: Pattern length.
        :type spin_count: int
        """
        self.spin_count = spin_count
        self.coefficients = {}
        for pattern, coefficient in (coefficients or {}).items():
            assert len(pattern) == spin_count, "Pattern {!r} has the wrong length".format(pattern)
            assert int(coefficient) == coefficient, "Coefficients are integers"
            if coefficient and "Z" in pattern:
                self.coefficients[pattern] = int(coefficient)

    @classmethod
    def from_terms(cls, terms, spin_count=SPIN_COUNT):
        """Sum of signed terms.

        :param terms: Terms to add.
        :type terms: iterable of :obj:`ZTerm`
        :rtype: :obj:`ZTermSum`
        """
        counts = Counter()
        for term in terms:
            counts[term.pattern] += term.sign
        return cls(counts, spin_count)

    def terms(self):
        """Expand into unit terms, patterns in sorted order.

        :rtype: list of :obj:`ZTerm`
        """
        terms = []
        for pattern in sorted(self.coefficients):
            coefficient = self.coefficients[pattern]
            sign = 1 if coefficient > 0 else -1
            terms.extend(ZTerm(pattern, sign) for _ in range(abs(coefficient)))
        return terms

    def scaled(self, factor):
        """Every coefficient multiplied by an integer.

        :rtype: :obj:`ZTermSum`
        """
        return ZTermSum({pattern: coefficient * factor
                         for pattern, coefficient in self.coefficients.items()},
                        self.spin_count)

    def __add__(self, other):
        counts = Counter(self.coefficients)
        counts.update(other.coefficients)
        return ZTermSum(counts, self.spin_count)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other):
        return (isinstance(other, ZTermSum) and self.spin_count == other.spin_count
                and self.coefficients == other.coefficients)

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for pattern in sorted(self.coefficients):
            coefficient = self.coefficients[pattern]
            magnitude = "" if abs(coefficient) == 1 else "{}*".format(abs(coefficient))
            parts.append("{}{}{}".format("+" if coefficient > 0 else "-", magnitude, pattern))
        return " ".join(parts)

    def __repr__(self):
        return "ZTermSum({})".format(self)


class PrepSequence(NativeSequence):
    """Preparation sequence of controlled-NOT and NOT gates, read in time order."""

    def __init__(self, ops=(), order=TIME_ORDER):
        """Initialize.

        :raises: ValueError if an op is not a controlled-NOT or a NOT.
        """
        super().__init__(ops, order)
        for op in self.ops:
            if not isinstance(op, (ControlledNot, NotGate)):
                raise ValueError("Preparation sequences hold only C and N, got {}".format(op))

    @classmethod
    def parse(cls, text, order=TIME_ORDER, gates=None):
        """Parse "C51 C45 C24 N3".

        :raises: :obj:`orderfinding.exceptions.ParseError` on a bad token.
        :rtype: :obj:`PrepSequence`
        """
        sequence = NativeSequence.parse(text, order, gates or _PREP_GATES)
        return cls(sequence.ops, order)


def conjugate(term, op):
    """Conjugate a Z string by a controlled-NOT or a NOT.

    Under C_ij a Z on the target j toggles a Z on the control i. Under N_i the
    sign flips when spin i carries Z.

    :param term: Signed string.
    :type term: :obj:`ZTerm`
    :param op: Controlled-NOT or NOT gate.
    :type op: :obj:`orderfinding.gates.Gate`
    :rtype: :obj:`ZTerm`
    """
    chars = list(term.pattern)
    if isinstance(op, ControlledNot):
        control, target = op.control - 1, op.target - 1
        if chars[target] == "Z":
            chars[control] = "I" if chars[control] == "Z" else "Z"
        return ZTerm("".join(chars), term.sign)
    if isinstance(op, NotGate):
        sign = -term.sign if chars[op.qubit - 1] == "Z" else term.sign
        return ZTerm(term.pattern, sign)
    raise ValueError("Cannot conjugate a product operator by {}".format(op))


def apply_prep_terms(seq, terms):
    """Conjugate each term by every gate of a sequence.

    :rtype: list of :obj:`ZTerm`
    """
    result = []
    for term in terms:
        for op in seq.gates():
            term = conjugate(term, op)
        result.append(term)
    return result


def apply_prep(seq, zsum):
    """Conjugate a sum by a preparation sequence.

    :param seq: Preparation sequence.
    :type seq: :obj:`PrepSequence`
    :param zsum: Sum to transform.
    :type zsum: :obj:`ZTermSum`
    :rtype: :obj:`ZTermSum`
    """
    return ZTermSum.from_terms(apply_prep_terms(seq, zsum.terms()), zsum.spin_count)


def equilibrium_zsum(spin_count=SPIN_COUNT):
    """Thermal deviation operator, the sum of single Z terms.

    :rtype: :obj:`ZTermSum`
    """
    return ZTermSum.from_terms((ZTerm.from_support({spin}, spin_count)
                                for spin in range(1, spin_count + 1)), spin_count)


def effective_pure_target(spin_count=SPIN_COUNT):
    """Every non-identity {I, Z} string with coefficient +1.

    :rtype: :obj:`ZTermSum`
    """
    return ZTermSum({"".join(chars): 1 for chars in itertools.product("IZ", repeat=spin_count)},
                    spin_count)


def verify_prep_set(seqs, spin_count=SPIN_COUNT, scale=1):
    """Sum the equilibrium terms after each preparation sequence.

    :param seqs: Preparation sequences.
    :type seqs: list of :obj:`PrepSequence`
    :param spin_count: Number of spins.
    :type spin_count: int
    :param scale: Positive integer multiple of the target to compare against.
    :type scale: int
    :return: Report with total_terms, summed, is_effective_pure, residual,
             canceled and canceled_pairs.
    :rtype: dict
    """
    equilibrium = equilibrium_zsum(spin_count).terms()
    terms = []
    for seq in seqs:
        terms.extend(apply_prep_terms(seq, equilibrium))
    summed = ZTermSum.from_terms(terms, spin_count)
    target = effective_pure_target(spin_count).scaled(scale)
    positive = Counter(term.pattern for term in terms if term.sign > 0)
    negative = Counter(term.pattern for term in terms if term.sign < 0)
    canceled = sorted(set(positive) & set(negative))
    report = {
        "total_terms": len(terms),
        "summed": summed,
        "is_effective_pure": bool(seqs) and summed == target,
        "residual": summed - target,
        "canceled": canceled,
        "canceled_pairs": sum(min(positive[pattern], negative[pattern]) for pattern in canceled),
    }
    LOGGER.debug("Preparation report: %r", report)
    return report


def zsum_to_operator(zsum):
    """Dense diagonal deviation operator of a sum.

    :rtype: :obj:`numpy.ndarray`
    """
    dimension = 2 ** zsum.spin_count
    diagonal = np.zeros(dimension)
    indices = np.arange(dimension)
    for pattern, coefficient in zsum.coefficients.items():
        signs = np.ones(dimension)
        for position, char in enumerate(pattern):
            if char == "Z":
                signs *= 1 - 2 * ((indices >> (zsum.spin_count - 1 - position)) & 1)
        diagonal += coefficient * signs
    return np.diag(diagonal).astype(complex)


def zsum_from_operator(operator, spin_count=SPIN_COUNT):
    """Decompose a diagonal operator into {I, Z} strings.

    The Walsh-Hadamard transform of the diagonal gives the coefficient of the
    string whose Z positions are the set bits of each row index.

    :raises: ValueError if the operator is not diagonal or not an integer combination.
    :rtype: :obj:`ZTermSum`
    """
    operator = np.asarray(operator)
    dimension = 2 ** spin_count
    if not np.allclose(operator, np.diag(np.diagonal(operator)), atol=1e-9):
        raise ValueError("Operator is not diagonal in the computational basis")
    raw = hadamard(dimension) @ np.diagonal(operator).real / dimension
    rounded = np.rint(raw)
    if not np.allclose(raw, rounded, atol=1e-9):
        raise ValueError("Operator is not an integer sum of Z strings")
    coefficients = {}
    for index, coefficient in enumerate(rounded):
        pattern = format(index, "0{}b".format(spin_count)).replace("0", "I").replace("1", "Z")
        coefficients[pattern] = int(coefficient)
    return ZTermSum(coefficients, spin_count)


def dense_apply_prep(seq, zsum):
    """Dense counterpart of :func:`apply_prep`, U rho U^dagger on the full matrix.

    :rtype: :obj:`ZTermSum`
    """
    unitary = seq.unitary(zsum.spin_count)
    rho = zsum_to_operator(zsum)
    return zsum_from_operator(unitary @ rho @ unitary.conj().T, zsum.spin_count)


def _mask(support, spin_count):
    mask = 0
    for spin in support:
        mask |= 1 << (spin_count - spin)
    return mask


def _pattern(mask, spin_count):
    return format(mask, "0{}b".format(spin_count)).replace("0", "I").replace("1", "Z")


def _independent(masks):
    basis = []
    for mask in masks:
        for pivot in basis:
            mask = min(mask, mask ^ pivot)
        if not mask:
            return False
        basis.append(mask)
    return True


def synthesize_prep(masks, signs, spin_count=SPIN_COUNT):
    """Preparation sequence turning the equilibrium terms into the given signed strings.

    Each mask is the Z support of one wanted string, spin 1 being the most
    significant bit. The masks must be linearly independent over GF(2). Which
    single-spin term ends up as which string is not controlled.

    :raises: ValueError if the masks are dependent.
    :param masks: spin_count bit masks.
    :type masks: sequence of int
    :param signs: +1 or -1 for each mask.
    :type signs: sequence of int
    :param spin_count: Number of spins.
    :type spin_count: int
    :rtype: :obj:`PrepSequence`
    """
    masks = list(masks)
    if len(masks) != spin_count or not _independent(masks):
        raise ValueError("Need {} independent strings, got {!r}".format(spin_count, masks))
    # Row reduction on the spin bits; C_ij adds bit j into bit i of every string.
    reduced = list(masks)
    recorded = []
    used = set()
    for column in range(spin_count):
        pivot = next(spin for spin in range(1, spin_count + 1)
                     if spin not in used and reduced[column] >> (spin_count - spin) & 1)
        used.add(pivot)
        for spin in range(1, spin_count + 1):
            if spin != pivot and reduced[column] >> (spin_count - spin) & 1:
                recorded.append(ControlledNot(spin, pivot))
                pivot_bit = 1 << (spin_count - pivot)
                spin_bit = 1 << (spin_count - spin)
                reduced = [mask ^ spin_bit if mask & pivot_bit else mask for mask in reduced]
    ops = list(reversed(recorded))
    wanted = {mask: sign for mask, sign in zip(masks, signs)}
    for flips in range(2 ** spin_count):
        if all((bin(flips & mask).count("1") % 2 == 1) == (sign < 0)
               for mask, sign in wanted.items()):
            break
    ops += [NotGate(spin) for spin in range(1, spin_count + 1)
            if flips >> (spin_count - spin) & 1]
    seq = PrepSequence(ops)
    expected = ZTermSum.from_terms((ZTerm(_pattern(mask, spin_count), sign)
                                    for mask, sign in wanted.items()), spin_count)
    assert apply_prep(seq, equilibrium_zsum(spin_count)) == expected, \
        "Synthesized {} does not produce {}".format(seq, expected)
    return seq


def _reachable(weight, experiments, spin_count):
    if weight == 0:
        return True
    for count in range(1, experiments + 1):
        if count == 1 and weight == spin_count:
            return True
        if count >= 2 and weight <= spin_count * count and (spin_count * count - weight) % 2 == 0:
            return True
    return False


class PrepScheduler:
    """Depth-first search for preparation schedules that sum to the target.

    Every experiment maps the equilibrium terms onto a basis of GF(2)^n with
    chosen signs. The search picks bases that cover as many still missing
    strings as possible and pads them with strings that later experiments
    cancel.
    """

    logger = logging.getLogger("PrepScheduler")

    def __init__(self, spin_count, max_experiments, scale=1, seed=0,
                 node_limit=200000, branch_limit=24):
        """Initialize.

        :param spin_count: Number of spins, 1 to 5.
        :type spin_count: int
        :param max_experiments: Most experiments allowed.
        :type max_experiments: int
        :param scale: Positive integer multiple of the target.
        :type scale: int
        :param seed: Seed of the vector ordering.
        :type seed: int
        :param node_limit: Search nodes before giving up.
        :type node_limit: int
        :param branch_limit: Candidate bases tried per cover size and node.
        :type branch_limit: int
        """
        assert 1 <= spin_count <= SPIN_COUNT, "Spin count must be 1..{}".format(SPIN_COUNT)
        assert scale >= 1, "Scale must be a positive integer"
        self.spin_count = spin_count
        self.max_experiments = max_experiments
        self.scale = scale
        self.node_limit = node_limit
        self.branch_limit = branch_limit
        self.vectors = list(range(1, 2 ** spin_count))
        random.Random(seed).shuffle(self.vectors)
        self.nodes = 0

    def _bases(self, deficit):
        needed = [vector for vector in self.vectors if deficit[vector]]
        spare = [vector for vector in self.vectors if not deficit[vector]]
        for size in range(min(self.spin_count, len(needed)), -1, -1):
            tried = 0
            for cover in itertools.combinations(needed, size):
                if not _independent(cover):
                    continue
                basis = self._pad(list(cover), spare)
                if basis is None:
                    continue
                yield basis, [1 if deficit[vector] > 0 else -1 for vector in cover] + \
                    [1] * (len(basis) - size)
                tried += 1
                if tried >= self.branch_limit:
                    break

    def _pad(self, basis, spare):
        for vector in spare:
            if len(basis) == self.spin_count:
                break
            if _independent(basis + [vector]):
                basis.append(vector)
        return basis if len(basis) == self.spin_count else None

    def _search(self, deficit, remaining, chosen):
        weight = sum(abs(value) for value in deficit.values())
        if weight == 0:
            return list(chosen)
        if not remaining or not _reachable(weight, remaining, self.spin_count):
            return None
        for basis, signs in self._bases(deficit):
            self.nodes += 1
            if self.nodes > self.node_limit:
                raise SearchExhausted("Node limit {} reached".format(self.node_limit))
            for vector, sign in zip(basis, signs):
                deficit[vector] -= sign
            chosen.append((basis, signs))
            found = self._search(deficit, remaining - 1, chosen)
            chosen.pop()
            for vector, sign in zip(basis, signs):
                deficit[vector] += sign
            if found is not None:
                return found
        return None

    def run(self):
        """Search for a schedule.

        :raises: :obj:`orderfinding.exceptions.SearchExhausted` if none is found.
        :rtype: list of :obj:`PrepSequence`
        """
        deficit = {vector: self.scale for vector in self.vectors}
        found = self._search(deficit, self.max_experiments, [])
        if found is None:
            raise SearchExhausted("No schedule for {} spin(s) within {} experiments".format(
                self.spin_count, self.max_experiments))
        self.logger.info("Found %d experiment schedule after %d nodes", len(found), self.nodes)
        return [synthesize_prep(basis, signs, self.spin_count) for basis, signs in found]


def schedule_prep(spin_count, max_experiments=9, scale=1, seed=0):
    """Preparation schedule whose summed terms equal the effective pure target.

    With an even spin count the unit target is out of reach, since every
    experiment adds spin_count unit terms and the target has 2^n - 1 of them;
    use scale=2 there.

    :raises: :obj:`orderfinding.exceptions.SearchExhausted` if no schedule is found.
    :param spin_count: Number of spins, 1 to 5.
    :type spin_count: int
    :param max_experiments: Most experiments allowed.
    :type max_experiments: int
    :param scale: Positive integer multiple of the target.
    :type scale: int
    :param seed: Seed of the search order.
    :type seed: int
    :rtype: list of :obj:`PrepSequence`
    """
    schedule = PrepScheduler(spin_count, max_experiments, scale, seed).run()
    report = verify_prep_set(schedule, spin_count, scale)
    assert report["is_effective_pure"], "Schedule failed verification: {}".format(
        report["residual"])
    return schedule


REFERENCE_PREP_SEQUENCES = [PrepSequence.parse(text) for text in (
    "C51 C45 C24 N3",
    "C14 C31 C53 N2",
    "C54 C51 N2",
    "C31 C43 C23 N5",
    "C21 C52 C45 C34",
    "C53 C25 C12 N4",
    "C12 C15 C13 C41",
    "C32 C13 C25 N4",
    "C35 C23 N1",
)]

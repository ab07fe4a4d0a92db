"""Inverse problems: recovering parameters and matrices, and the twist map.

* `reconstruct_from_initial_minors` inverts initial-minor evaluation: a
  matrix is determined by its n^2 initial minors when they are all
  nonzero, through the corner recursion det = (corner cofactor) * x_ij +
  (rest).
* `factor_staircase` recovers the unique positive parameter vector of the
  staircase scheme for a totally positive matrix.  The initial minors of
  the staircase product are monomials in the parameters with an
  invertible (unimodular) exponent matrix, so factoring is exact monomial
  inversion; the exponent matrix is computed once per size by evaluating
  the product at distinct primes and factoring the minors back.
* `factor_scheme` factors along any full-type scheme by routing the
  staircase parameters through local moves.
* `twist` is the birational map assembled from the LDU factors of the
  transposed matrix against the order-reversing permutation; it sends the
  totally positive matrices onto themselves, and the factorization
  parameters of any scheme become Laurent monomials in the chamber minors
  of the twisted matrix.  `verify_twist_monomial` certifies that monomial
  property numerically for a given scheme.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .diagrams import DoubleWiringDiagram, chamber_minors
from .exact import as_scalar
from .matrices import (Matrix, MinorSpec, _det_fraction_rows,
                       initial_minor_spec, initial_minor_specs, ldu_decompose,
                       minor)
from .words import (DIAG, Permutation, Word, WordError, infer_n,
                    is_full_scheme, move_path, product_map, staircase_scheme,
                    transport_params, validate_scheme)


class NotTotallyPositiveError(ValueError):
    """Input is not totally positive; carries the failing initial minor."""

    def __init__(self, spec: MinorSpec, value: Fraction):
        super().__init__(
            f"matrix is not totally positive: initial minor {spec} = {value}")
        self.spec = spec
        self.value = value


class ReconstructionError(ValueError):
    """Initial-minor data does not determine a matrix."""


def initial_minors(x: Matrix) -> dict[MinorSpec, Fraction]:
    """All n^2 initial minors of x, keyed by spec."""
    return {spec: minor(x, spec) for spec in initial_minor_specs(x.n)}


def reconstruct_from_initial_minors(values: Mapping[MinorSpec, Fraction],
                                    n: int) -> Matrix:
    """The unique matrix with the given nonzero initial minors.

    Entries are recovered in order of increasing i + j: the initial minor
    with corner (i, j) is linear in the unknown corner entry with
    coefficient the corner-(i-1, j-1) initial minor.
    """
    vals: dict[MinorSpec, Fraction] = {}
    for spec in initial_minor_specs(n):
        if spec not in values:
            raise ReconstructionError(f"missing initial minor {spec}")
        value = as_scalar(values[spec])
        if value == 0:
            raise ReconstructionError(
                f"initial minor {spec} is zero; reconstruction needs all "
                f"initial minors nonzero")
        vals[spec] = value
    entries: list[list[Fraction | None]] = [[None] * n for _ in range(n)]
    for total in range(2, 2 * n + 1):
        for i in range(max(1, total - n), min(n, total - 1) + 1):
            j = total - i
            spec = initial_minor_spec(n, i, j)
            if min(i, j) == 1:
                entries[i - 1][j - 1] = vals[spec]
                continue
            sub = [[(Fraction(0) if (r, c) == (i, j)
                     else entries[r - 1][c - 1])
                    for c in spec.cols] for r in spec.rows]
            rest = _det_fraction_rows(sub)
            cofactor = vals[initial_minor_spec(n, i - 1, j - 1)]
            entries[i - 1][j - 1] = (vals[spec] - rest) / cofactor
    return Matrix(entries)


# ---------------------------------------------------------------------------
# monomial machinery


def _primes(count: int) -> list[int]:
    found: list[int] = []
    candidate = 2
    while len(found) < count:
        if all(candidate % p for p in found):
            found.append(candidate)
        candidate += 1
    return found


def _prime_exponents(value: Fraction, primes: Sequence[int]) \
        -> list[int] | None:
    """Exponent vector of value over the given primes, or None if anything
    else divides it (including sign or a leftover factor)."""
    if value <= 0:
        return None
    num, den = value.numerator, value.denominator
    exps = []
    for p in primes:
        e = 0
        while num % p == 0:
            num //= p
            e += 1
        while den % p == 0:
            den //= p
            e -= 1
        exps.append(e)
    if num != 1 or den != 1:
        return None
    return exps


def _invert_rational(rows: list[list[Fraction]]) -> list[list[Fraction]] | None:
    n = len(rows)
    work = [[Fraction(v) for v in row]
            + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(rows)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot_row is None:
            return None
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [v / pivot for v in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [v - factor * w for v, w in zip(work[r], work[col])]
    return [row[n:] for row in work]


_staircase_cache: dict[int, tuple[list[MinorSpec], list[list[int]],
                                  list[list[int]]]] = {}


def staircase_minor_exponents(n: int) \
        -> tuple[list[MinorSpec], list[list[int]], list[list[int]]]:
    """(specs, E, E_inverse): the initial minors of the staircase product
    equal the parameter monomials t^E[row]; E is unimodular and both E and
    its inverse are integer matrices."""
    if n in _staircase_cache:
        return _staircase_cache[n]
    word = staircase_scheme(n)
    primes = _primes(n * n)
    x = product_map(word, primes, n)
    specs = initial_minor_specs(n)
    exponents = []
    for spec in specs:
        exps = _prime_exponents(minor(x, spec), primes)
        if exps is None or any(e not in (0, 1) for e in exps):
            raise AssertionError(
                f"initial minor {spec} of the staircase product is not a "
                f"0/1 parameter monomial")
        exponents.append(exps)
    inverse = _invert_rational([[Fraction(e) for e in row]
                                for row in exponents])
    if inverse is None:
        raise AssertionError("staircase exponent matrix is singular")
    int_inverse = []
    for row in inverse:
        if any(v.denominator != 1 for v in row):
            raise AssertionError("staircase exponent matrix is not unimodular")
        int_inverse.append([int(v) for v in row])
    _staircase_cache[n] = (specs, exponents, int_inverse)
    return _staircase_cache[n]


def staircase_edge_for_minor(n: int) -> dict[MinorSpec, int]:
    """The bijection from initial minors to essential-edge ordinals: each
    initial minor covers a set of essential edges, of which exactly one is
    uppermost (touches the highest level); that edge's weight is the minor
    divided by lower edges' weights."""
    specs, exponents, _ = staircase_minor_exponents(n)
    word = staircase_scheme(n)

    def level(k: int) -> int:
        letter = word[k]
        return letter.index if letter.kind == DIAG else letter.index + 1

    mapping: dict[MinorSpec, int] = {}
    for spec, row in zip(specs, exponents):
        covered = [k for k, e in enumerate(row) if e]
        top = max(level(k) for k in covered)
        uppermost = [k for k in covered if level(k) == top]
        if len(uppermost) != 1:
            raise AssertionError(f"no unique uppermost edge for {spec}")
        mapping[spec] = uppermost[0]
    if len(set(mapping.values())) != n * n:
        raise AssertionError("minor-to-edge map is not a bijection")
    return mapping


def factor_staircase(x: Matrix) -> tuple[Fraction, ...]:
    """The unique positive parameters with
    ``product_map(staircase_scheme(n), t) == x`` for totally positive x.

    Raises :class:`NotTotallyPositiveError` citing the first failing
    initial minor otherwise.
    """
    n = x.n
    specs, _, inverse = staircase_minor_exponents(n)
    values = []
    for spec in specs:
        value = minor(x, spec)
        if value <= 0:
            raise NotTotallyPositiveError(spec, value)
        values.append(value)
    params = []
    for row in inverse:
        t = Fraction(1)
        for value, e in zip(values, row):
            if e:
                t *= value ** e
        params.append(t)
    return tuple(params)


def factor_scheme(x: Matrix, scheme: Word) -> tuple[Fraction, ...]:
    """Factorization parameters of x along an arbitrary full-type scheme,
    via the staircase factorization and exact parameter transport."""
    n = x.n
    validate_scheme(scheme, n)
    if not is_full_scheme(scheme, n):
        raise WordError("factor_scheme needs a scheme of full type "
                        "(both slant subwords reduced for the reversal)")
    start = staircase_scheme(n)
    params = factor_staircase(x)
    word, params = transport_params(start, params,
                                    move_path(start, scheme, n))
    if word != tuple(scheme):
        raise AssertionError("transport did not reach the requested scheme")
    if any(t <= 0 for t in params):
        raise AssertionError("transported parameters lost positivity")
    return params


def parameter_sum_formula(x: Matrix) -> Fraction:
    """Closed form for the sum of the staircase factorization parameters:
    a Laurent polynomial in leading principal and near-principal minors."""
    n = x.n

    def leading(k: int) -> Fraction:
        if k == 0:
            return Fraction(1)
        return minor(x, MinorSpec(tuple(range(1, k + 1)),
                                  tuple(range(1, k + 1))))

    total = Fraction(0)
    for i in range(1, n + 1):
        total += leading(i) / leading(i - 1)
    for i in range(1, n):
        rows = tuple(range(1, i)) + (i + 1,)
        cols = tuple(range(1, i + 1))
        low = minor(x, MinorSpec(rows, cols))
        high = minor(x, MinorSpec(cols, rows))
        total += (low + high) / leading(i)
    return total


# ---------------------------------------------------------------------------
# the twist map


def twist(x: Matrix) -> Matrix:
    """The twist of x: with w the order-reversing permutation matrix and
    [y]_-, [y]_+ the unit triangular LDU factors,

        twist(x) = [x^T w]_+  *  w * (x^T)^(-1) * w  *  [w x^T]_-

    Defined whenever the two LDU decompositions exist (always, for totally
    positive x); maps totally positive matrices onto themselves.
    """
    w = Permutation.reversal(x.n).matrix()
    xt = x.transpose()
    _, _, plus = ldu_decompose(xt * w)
    minus, _, _ = ldu_decompose(w * xt)
    return plus * (w * xt.inverse() * w) * minus


def verify_twist_monomial(scheme: Word, n: int | None = None,
                          samples: int = 3, rng=None) -> bool:
    """Certify that each factorization parameter of the scheme is a Laurent
    monomial in the chamber minors of the twisted matrix.

    Exponents are fitted exactly: the scheme is evaluated at distinct prime
    parameters, the chamber minors of the twist factor back into those
    primes (already a consistency check, repeated under a second prime
    assignment), and the resulting integer exponent matrix is inverted.
    The fitted monomials are then verified exactly on fresh random positive
    samples.  Returns False instead of raising when any step refutes the
    monomial property.
    """
    import random

    if n is None:
        n = infer_n(scheme)
    if not is_full_scheme(scheme, n):
        raise WordError("monomial verification needs a full-type scheme")
    rng = rng or random.Random(20240)
    uncircled = tuple(l for l in scheme if l.kind != DIAG)
    diagram = DoubleWiringDiagram(uncircled, n)
    chamber_specs = chamber_minors(diagram)
    size = n * n

    def chamber_values(params) -> list[Fraction] | None:
        x = product_map(scheme, params, n)
        twisted = twist(x)
        return [minor(twisted, spec) for spec in chamber_specs]

    exponent_rows: list[list[int]] | None = None
    base = _primes(size)
    for assignment in (base, base[::-1]):
        values = chamber_values(assignment)
        rows = []
        for value in values:
            exps = _prime_exponents(value, assignment)
            if exps is None:
                return False
            rows.append(exps)
        if exponent_rows is None:
            exponent_rows = rows
        elif rows != exponent_rows:
            return False

    # parameter k is the monomial prod_j c_j ** beta[k][j]; the exponent
    # rows satisfy beta . E = identity, so beta is the inverse of E
    inverse = _invert_rational([[Fraction(e) for e in row]
                                for row in exponent_rows])
    if inverse is None:
        return False
    beta: list[list[int]] = []
    for row in inverse:
        if any(v.denominator != 1 for v in row):
            return False
        beta.append([int(v) for v in row])

    for _ in range(samples):
        params = [Fraction(rng.randint(1, 9), rng.randint(1, 9))
                  for _ in range(size)]
        values = chamber_values(params)
        for k in range(size):
            monomial = Fraction(1)
            for j in range(size):
                if beta[k][j]:
                    monomial *= values[j] ** beta[k][j]
            if monomial != params[k]:
                return False
    return True

"""Total positivity and nonnegativity tests, oscillation, and cell type.

Every test here is an exact sign computation.  The brute-force testers
check all C(2n, n) - 1 minors and act as oracles for the efficient
criteria:

* `test_initial_minors`: the n^2 initial minors (equivalent to total
  positivity);
* `test_chamber_minors`: the n^2 chamber minors of any double wiring
  diagram (the initial criterion is the minimal diagram's instance);
* `test_fekete_solid`: all solid minors;
* `test_tnn_efficient`: for invertible matrices, nonnegativity of the
  minors occupying several initial rows or several initial columns plus
  positivity of the leading principal minors -- 2^(n+1) - n - 2 minors in
  total;
* `test_tp_given_tnn`: for a matrix already known totally nonnegative,
  nonvanishing of the 2n - 1 antiprincipal minors;
* `is_oscillatory`: equivalent characterizations of invertible totally
  nonnegative matrices some power of which is totally positive;
* `bruhat_type`: the pair of permutations naming the double coset of the
  upper and lower triangular Bruhat decompositions that contains x.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable

from .diagrams import DoubleWiringDiagram, chamber_minors
from .matrices import (Matrix, MinorSpec, all_minor_specs, exact_rank,
                       initial_minor_specs, is_block_triangular, minor,
                       solid_minor_specs)
from .words import Permutation


class GuardExceeded(ValueError):
    """A brute-force enumeration guard was exceeded."""


class NotApplicableError(ValueError):
    """The test's hypothesis fails for this input (e.g. singular matrix)."""


def check_guard(n: int, guard: int) -> None:
    if n > guard:
        raise GuardExceeded(
            f"brute force over all minors is guarded at n <= {guard}; "
            f"pass a larger guard to override")


def failing_minors(x: Matrix, specs: Iterable[MinorSpec], *,
                   strict: bool) -> list[tuple[MinorSpec, Fraction]]:
    """Specs whose minors fail the sign requirement (> 0, or >= 0)."""
    bad = []
    for spec in specs:
        value = minor(x, spec)
        if (value <= 0) if strict else (value < 0):
            bad.append((spec, value))
    return bad


def is_tp_bruteforce(x: Matrix, guard: int = 6) -> bool:
    """Every one of the C(2n, n) - 1 minors is positive."""
    check_guard(x.n, guard)
    return not failing_minors(x, all_minor_specs(x.n), strict=True)


def is_tnn_bruteforce(x: Matrix, guard: int = 6) -> bool:
    """Every minor is nonnegative."""
    check_guard(x.n, guard)
    return not failing_minors(x, all_minor_specs(x.n), strict=False)


def test_initial_minors(x: Matrix) -> bool:
    """Positivity of the n^2 initial minors; equivalent to total
    positivity."""
    return not failing_minors(x, initial_minor_specs(x.n), strict=True)


def test_chamber_minors(x: Matrix, d: DoubleWiringDiagram) -> bool:
    """Positivity of the n^2 chamber minors of the diagram; equivalent to
    total positivity for every diagram."""
    if d.n != x.n:
        raise ValueError(f"diagram size {d.n} does not match matrix {x.n}")
    return not failing_minors(x, chamber_minors(d), strict=True)


def test_fekete_solid(x: Matrix) -> bool:
    """Positivity of all solid minors; equivalent to total positivity."""
    return not failing_minors(x, solid_minor_specs(x.n), strict=True)


# ---------------------------------------------------------------------------
# efficient total nonnegativity for invertible matrices


def tnn_efficient_specs(n: int) -> list[MinorSpec]:
    """Minors with row set [1, k] (any columns) or column set [1, k] (any
    rows), deduplicated; exactly 2^(n+1) - n - 2 of them."""
    indices = range(1, n + 1)
    seen = set()
    specs = []
    for k in range(1, n + 1):
        head = tuple(range(1, k + 1))
        for other in itertools.combinations(indices, k):
            for spec in (MinorSpec(head, other), MinorSpec(other, head)):
                key = (spec.rows, spec.cols)
                if key not in seen:
                    seen.add(key)
                    specs.append(spec)
    expected = 2 ** (n + 1) - n - 2
    if len(specs) != expected:
        raise AssertionError(
            f"enumerated {len(specs)} initial-row/column minors, "
            f"expected {expected}")
    return specs


def test_tnn_efficient(x: Matrix) -> tuple[bool, int]:
    """Total nonnegativity test for invertible matrices.

    Checks nonnegativity of every minor occupying several initial rows or
    several initial columns, and positivity of the leading principal
    minors.  Returns (verdict, number of minors checked); raises
    :class:`NotApplicableError` on singular input (use the brute-force
    test instead).
    """
    n = x.n
    if x.det() == 0:
        raise NotApplicableError(
            "matrix is singular; the efficient criterion requires an "
            "invertible input -- use the brute-force test")
    specs = tnn_efficient_specs(n)
    leading = {tuple(range(1, k + 1)) for k in range(1, n + 1)}
    for spec in specs:
        value = minor(x, spec)
        if value < 0:
            return False, len(specs)
        if value == 0 and spec.rows in leading and spec.rows == spec.cols:
            return False, len(specs)
    return True, len(specs)


def test_tp_given_tnn(x: Matrix) -> bool:
    """For a totally nonnegative x: totally positive iff the 2n - 1
    antiprincipal minors (top-right and bottom-left corner minors) are all
    nonzero."""
    n = x.n
    for i in range(1, n + 1):
        top = MinorSpec(tuple(range(1, i + 1)), tuple(range(n - i + 1, n + 1)))
        if minor(x, top) == 0:
            return False
        bottom = MinorSpec(tuple(range(n - i + 1, n + 1)), tuple(range(1, i + 1)))
        if minor(x, bottom) == 0:
            return False
    return True


def antiprincipal_specs(n: int) -> list[MinorSpec]:
    specs = []
    for i in range(1, n + 1):
        specs.append(MinorSpec(tuple(range(1, i + 1)),
                               tuple(range(n - i + 1, n + 1))))
        if i < n:
            specs.append(MinorSpec(tuple(range(n - i + 1, n + 1)),
                                   tuple(range(1, i + 1))))
    return specs


# ---------------------------------------------------------------------------
# oscillatory matrices


def is_oscillatory(x: Matrix, criterion: str = "b", guard: int = 6) -> bool:
    """Test whether an invertible totally nonnegative matrix is oscillatory
    (some power is totally positive) by one of three equivalent criteria:

    * ``"b"``: all entries just above and just below the diagonal positive;
    * ``"c"``: x^(n-1) totally positive (checked brute force);
    * ``"d"``: x is not block-triangular.
    """
    if x.det() == 0:
        raise NotApplicableError("oscillation is defined for invertible "
                                 "totally nonnegative matrices")
    if not is_tnn_bruteforce(x, guard=guard):
        raise NotApplicableError("input is not totally nonnegative")
    n = x.n
    if criterion == "b":
        return all(x.entry(i, i + 1) > 0 and x.entry(i + 1, i) > 0
                   for i in range(1, n))
    if criterion == "c":
        return is_tp_bruteforce(x ** (n - 1), guard=guard)
    if criterion == "d":
        return not is_block_triangular(x)
    raise ValueError(f"unknown criterion {criterion!r}; pick b, c, or d")


# ---------------------------------------------------------------------------
# double Bruhat cell type


def bruhat_type(x: Matrix) -> tuple[Permutation, Permutation]:
    """The pair (u, v) of permutations such that x lies in the intersection
    of the upper-Bruhat double coset of u and the lower-Bruhat double coset
    of v.

    u is read off the rank profile of the southwest submatrices (rows
    i..n, columns 1..j), which left/right multiplication by upper
    triangular matrices preserves; v off the northeast submatrices (rows
    1..i, columns j..n), preserved by lower triangular multiplication.
    For a totally nonnegative x, (u, v) is its factorization type.
    """
    n = x.n
    if x.det() == 0:
        raise NotApplicableError("Bruhat type is computed for invertible "
                                 "matrices only")

    def sw_rank(i: int, j: int) -> int:
        if j == 0:
            return 0
        return exact_rank(x.submatrix_rows(range(i, n + 1), range(1, j + 1)))

    def ne_rank(i: int, j: int) -> int:
        if j == n + 1:
            return 0
        return exact_rank(x.submatrix_rows(range(1, i + 1), range(j, n + 1)))

    u_images = []
    for j in range(1, n + 1):
        u_images.append(max(i for i in range(1, n + 1)
                            if sw_rank(i, j) > sw_rank(i, j - 1)))
    v_images = []
    for j in range(1, n + 1):
        v_images.append(min(i for i in range(1, n + 1)
                            if ne_rank(i, j) > ne_rank(i, j + 1)))
    return Permutation(tuple(u_images)), Permutation(tuple(v_images))

"""Total positivity tests, from brute force to optimal criteria.

An n x n matrix has C(2n, n) - 1 minors, far too many to check one by
one.  The initial-minor criterion needs only n^2 of them, and no smaller
family suffices.  For total nonnegativity of an invertible matrix, the
initial-rows/initial-columns family needs 2^(n+1) - n - 2 minors.  All
verdicts below are exact rational sign tests.
"""

from math import comb

from totpos import (Matrix, is_tnn_bruteforce, is_tp_bruteforce,
                    test_fekete_solid, test_initial_minors,
                    test_tnn_efficient, test_tp_given_tnn, bruhat_type,
                    is_oscillatory)

x = Matrix([[1, 1, 1], [1, 2, 3], [1, 3, 6]])
print("x =")
print(x)
print("\nminor counts: all =", comb(6, 3) - 1, " initial = 9  solid = 14")
print("brute force TP:", is_tp_bruteforce(x))
print("initial-minor criterion:", test_initial_minors(x))
print("solid-minor criterion:", test_fekete_solid(x))

print("\nThe binomial matrix is totally nonnegative but not totally positive:")
pascal = Matrix([[1, 0, 0], [1, 1, 0], [1, 2, 1]])
verdict, checked = test_tnn_efficient(pascal)
print("efficient TNN test:", verdict, f"({checked} minors, vs",
      comb(6, 3) - 1, "for brute force)")
print("brute force TNN:", is_tnn_bruteforce(pascal))
print("antiprincipal test for TP given TNN:", test_tp_given_tnn(pascal))

print("\nOscillatory means some power is totally positive.  For an")
print("invertible totally nonnegative matrix this is equivalent to having")
print("positive entries next to the diagonal, to x^(n-1) being totally")
print("positive, and to x not being block-triangular:")
for name, m in [("x", x), ("identity", Matrix.identity(3)),
                ("pascal", pascal)]:
    verdicts = [is_oscillatory(m, c) for c in "bcd"]
    print(f"  {name}: b/c/d ->", verdicts)

print("\nInvertible totally nonnegative matrices are classified by a pair")
print("of permutations (their double Bruhat cell):")
for name, m in [("x", x), ("identity", Matrix.identity(3)),
                ("pascal", pascal)]:
    u, v = bruhat_type(m)
    print(f"  {name}: u = {u.one_line()}  v = {v.one_line()}")

"""Somos-5 and the Laurent phenomenon.

The recurrence a(n) a(n+5) = a(n+1) a(n+4) + a(n+2) a(n+3) divides by
a(n) at every step, yet from the unit seed it generates integers forever,
and symbolically every term is a Laurent polynomial in the five seeds --
conjecturally with nonnegative integer coefficients.  The division is
performed exactly in the Laurent ring, so a falsification could not slip
through unnoticed.
"""

from fractions import Fraction

from totpos import somos5_numeric, somos5_symbolic
from totpos.exact import laurent_has_nonnegative_coeffs

print("unit seed, first 20 terms:")
print(" ", [str(t) for t in somos5_numeric([1] * 5, 20)])

print("\nfractional seed (1/2, 1, 3, 1, 2/5), terms 6..10:")
terms = somos5_numeric([Fraction(1, 2), 1, 3, 1, Fraction(2, 5)], 10)
print(" ", [str(t) for t in terms[5:]])

print("\nsymbolic terms in the seeds a1..a5:")
for k, term in enumerate(somos5_symbolic(9), start=1):
    if k >= 6:
        flag = "nonneg ok" if laurent_has_nonnegative_coeffs(term) \
            else "NEGATIVE COEFFICIENT"
        print(f"  a{k} ({len(term.terms)} terms, {flag}) = {term}")

print("\nterm sizes through a12:",
      [len(t.terms) for t in somos5_symbolic(12)])

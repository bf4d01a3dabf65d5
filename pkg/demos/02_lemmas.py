"""The three p-adic tools behind the proofs, checked on small numbers."""
import random
from fractions import Fraction

from specialpair.arith import lte_valuation, solve_power_congruence, vp
from specialpair.symbols import gen_jacobi, lemma3_hypotheses_hold

# Lifting the exponent. At an odd prime the valuation just adds:
#   v_p(A^n - 1) = v_p(A - 1) + v_p(n)
A, n, p = Fraction(23, 5), 15, 3
print(lte_valuation(A, n, p), "==", vp(A - 1, p) + vp(n, p), "==", vp(A**n - 1, p))

# at p = 2 it is only a lower bound; 3^2 - 1 = 8 has an extra factor
print(lte_valuation(3, 2, 2), ">=", vp(3 - 1, 2) + vp(2, 2))

# Power congruence: find n with A^n = B mod p^T
A, B, p, T = 4, 7, 3, 5
n = solve_power_congruence(A, B, p, T)
print("4^%d mod 243 = %d, 7 mod 243 = 7" % (n, pow(4, n, 3**5)))

# Reciprocity: if eta > 0 and eta = 1 mod 8d (2-adically and at every
# prime of d) then the generalized symbol (d/eta) is 1
rng = random.Random(1)
d = -15
for _ in range(5):
    Q = rng.choice([7, 11, 13, 17, 19, 23])
    eta = Fraction(Q + 8 * abs(d) * rng.randint(1, 50), Q)
    print(f"d={d} eta={eta}  hypotheses={lemma3_hypotheses_hold(d, eta)}  symbol={gen_jacobi(d, eta)}")

# without the hypotheses the symbol can be -1
print(gen_jacobi(3, Fraction(25, 49)), gen_jacobi(3, 5))

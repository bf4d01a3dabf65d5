"""A first special pair: alpha = 17, beta = 2.

Walks through the membership test by hand, then lets the library do it.
"""
from specialpair import classify_pair, find_special_primes, theorem1_check
from specialpair.arith import mult_order, val_of_power_minus_one
from specialpair.symbols import legendre

alpha, beta = 17, 2

# 17 is 3 mod 7, and 3 is not a square mod 7
print("(17/7) =", legendre(alpha, 7))

# how deep does 17^6 - 1 sit in the 7-adic filtration?
e = val_of_power_minus_one(alpha, 6, 7)
ell = mult_order(alpha**2, 7, e)
print("e =", e, " ord of alpha^2 mod 7^e =", ell)

# beta is a power of alpha^2 modulo 7^e, so q = 7 witnesses the pair
w = theorem1_check(alpha, beta, 7)
print("witness:", w)
print("17^(2k) mod 7 =", pow(alpha, 2 * w.k, 7), " beta mod 7 =", beta % 7)

# the classifier searches q = 3, 5, 7, ... and stops at the first witness
cls = classify_pair(alpha, beta)
print(cls.kind, "after", cls.primes_tried, "primes")

# primes p where ord_p(17) / ord_p(2) is an even integer
for s in find_special_primes(alpha, beta, 2000, 5):
    print(f"p={s.p:5d}  ord(17)={s.ord_alpha:5d}  ord(2)={s.ord_beta:5d}  ratio={s.ratio}")

# necessary conditions: a square alpha, or a shared quadratic field
print(classify_pair(4, 7).kind)
print(classify_pair(12, 27).kind, classify_pair(12, 27).d)

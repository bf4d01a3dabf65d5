"""The sieve-window experiment: primes q near sqrt(N)/2 and the Wieferich filter."""
from specialpair.arith import val_of_power_minus_one
from specialpair.census import (
    hypothesis1_scan,
    hypothesis_threshold,
    pipeline_check,
    primitive_root_set,
    sieve_window,
)

N = 10**4
window = sieve_window(N)
print("window primes:", window)
print("threshold:", round(hypothesis_threshold(N), 3))

for rep in hypothesis1_scan(N, [2, 3, -5, 7]):
    print(rep)

# primes in the window where 2 generates everything and beta is a residue
print("P(2) for beta=3:", primitive_root_set(2, N, 3))

report = pipeline_check(2, 3, N)
print(report.to_dict())

# 1093 is a Wieferich prime: 2^1092 = 1 mod 1093^2, so it is filtered out
print("v_1093(2^1092 - 1) =", val_of_power_minus_one(2, 1092, 1093))
print(pipeline_check(2, 3, N, primes=[1093]).wieferich_ok_q)

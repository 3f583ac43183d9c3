"""Number-theoretic filters: primitive parts, small Diophantine searches, rho.

Run: python3 demos/04_number_theory.py
"""

from flagdesigns import (
    check_eq_rid,
    compute_rho,
    gaussian_binomial,
    lemma_div_solutions,
    pillai_solutions,
    primitive_part,
)

for a, e in [(2, 6), (7, 2), (3, 4), (3, 5), (10, 3)]:
    print(f"primitive part of {a}^{e} - 1: {primitive_part(a, e)}")

print("[4 choose 2]_3 =", gaussian_binomial(4, 2, 3))
print("p^m + 2 = u prime, u | p^z - 1, z <= 4m:", lemma_div_solutions(10 ** 5))
sols = pillai_solutions(10 ** 6)
print("p^m + 2 = u^h up to 10^6:", len(sols), "solutions, with h > 1 and m even:",
      [s for s in sols if s[3] > 1 and s[1] % 2 == 0])
print("(q,h) = (2,6) passes for some t:", any(check_eq_rid(6, 2).values()))
print("rho(27, 3, |PSL(2,7)|) =", compute_rho(27, 3, 336))

"""
Shifted semigroups and the min-gcd inequality
==============================================

S_J = {sum a_j N_j : every a_j >= 1}.  If S' sits inside a finite union of
such semigroups, the smallest gcd among the pieces is at most gcd(S').
"""

from spindex import ShiftedSemigroup, check_stability, sg_contains, sg_gcd, stability_threshold

S = ShiftedSemigroup((4, 6))
print([d for d in range(1, 30) if sg_contains(S, d)])
print("gcd", sg_gcd(S), " every multiple of it from", stability_threshold(S), "on")

# %%
parts = [ShiftedSemigroup((4, 6)), ShiftedSemigroup((9, 15))]
rep = check_stability(parts, (10, 14))
print("contained:", rep.contained, " s_min =", rep.s_min, " s' =", rep.s_prime)

# %%
# the certificate writes s'*m as a nonnegative combination of elements of S'
cert = rep.certificate
print("xs =", cert.xs, " lambdas =", cert.lambdas, " m0 =", cert.m0)
m = rep.sampled_m[0]
print(m, "->", cert.coefficients(m), cert.verify(m))

# %%
# a case that fails: 3 lands outside both pieces
print(check_stability(parts, (3,)).witness)

"""
The two worked families and their invariants
=============================================

Both families have coprime multiplicities, so index 1, while the smallest
N_J over all strata is 2.
"""

from spindex import degree_set, example1, example2, genus, index, nu, sp_index, strata_of, validate_model

# %%
rt = example1(0)
print("N =", rt.N)
for row in rt.C:
    print("   ", row)

report = validate_model(rt)
print("realizable:", report.winters_ok, " genus:", report.genus)

# %%
# strata: every component, plus every pair that meets
for s in strata_of(rt):
    print([j + 1 for j in s.J], "N_J =", s.N_J)

# %%
for x in range(4):
    for make in (example1, example2):
        t = make(x)
        print(f"{t.name}(x={x}):  index={index(t)}  sp_index={sp_index(t)}  nu={nu(t)}  g={genus(t)}  D={degree_set(t).generators}")

"""
Blowing up, and hitting a prescribed degree
============================================
"""

from spindex import (
    blowup_intersection,
    blowup_smooth_point,
    degree_set,
    example1,
    random_refinement,
    realize_degree,
    sp_index,
)

base = example1(0)

# a smooth point on E_1 and the point where E_4 meets E_5 (0-based below)
a = blowup_smooth_point(base, 0)
b = blowup_intersection(base, 3, 4)
print("smooth:      new N =", a.N[-1], " c_11 now", a.C[0][0])
print("intersection: new N =", b.N[-1], " c_45 now", b.C[3][4])
print("sp_index unchanged:", sp_index(base) == sp_index(a) == sp_index(b))

# %%
# twenty random blow-ups leave the degree set alone
chain = random_refinement(base, 20, seed=7)
print(chain.result.r, "components after", len(chain.steps), "steps")
print(degree_set(chain.result).generators, "==", degree_set(base).generators)

# %%
# 12 = 2*3 + 1*6 on the edge E_3 E_5; two mediant blow-ups give a component of multiplicity 12
chain = realize_degree(base, (2, 4), 12)
for step in chain.steps:
    print(step.kind, [c + 1 for c in step.centre], "->", step.new_multiplicity)
print("witness component", chain.witness + 1, "has N =", chain.result.N[chain.witness])
assert chain.replay() == chain.result

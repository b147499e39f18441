"""
Looking for strict types by bounded enumeration
================================================

Default box: up to 6 components, multiplicities up to 6, genus labels up to
1, at most 2 intersection points per pair, |c_ii| up to 4.  Results are
evidence within the box only.
"""

from spindex import SearchConstraints, bound_check, enumerate_types, export_dot

strict = dict(index_eq=1, sp_index_min=2)

res = enumerate_types(SearchConstraints(genus=2, **strict))
print(res.count, "type(s), exhausted:", res.exhausted, f"({res.stats.nodes} nodes, {res.stats.elapsed:.1f}s)")
for t in res.types:
    print(t.N, t.G)
    print(bound_check(t))
    print(export_dot(t))

# %%
for g in (0, 3):
    r = enumerate_types(SearchConstraints(genus=g, **strict))
    print(f"g={g}: {r.count} found, exhausted={r.exhausted}")

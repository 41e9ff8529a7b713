"""
Every spec held by (3, 4, 5)
============================

For (3, 4, 5) the property reads ``l(7 + 5v) = 12k``. That splits into six linear
Diophantine equations, one per divisor l of 12.
"""

# %%
from pythrecip import ReciprocalSpec, solve_linear_diophantine
from pythrecip.reciprocal_solver import classify_345, group_members_345, groups_345

# %%
# Each group is the positive part of the solution family of -5v + (12/l) k = 7.
for g in groups_345():
    fam = solve_linear_diophantine(-5, 12 // g.l, 7)
    print(f"group {g.id}: l={g.l:2d}  v = {g.v_offset} + {g.v_step}t, k = {g.k_offset} + {g.k_step}t  "
          f"(solver: x0={fam.x0}, y0={fam.y0}, steps {fam.step_x}, {fam.step_y})")

# %%
# Raw members include k, l with a common factor; the default listing drops them.
print(group_members_345(2, include_noncoprime=True)[:6])
print(group_members_345(2))

# %%
print(classify_345(ReciprocalSpec(13, 6, 1)), classify_345(ReciprocalSpec(7, 7, 2)), classify_345(ReciprocalSpec(2, 3, 4)))

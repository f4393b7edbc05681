# %% [markdown]
# # A four-parameter family of homogeneous cubic fields
#
# The discriminant of the family factors as a quartic R in (x, y) times a
# square. The fields whose quartic is itself a square give trivolutions.

# %%
from itertools import product

from folcremona import HomogeneousFamilyParams, family_parameter_scan, homogeneous_family_build, quartic_square_test
from folcremona.cubic import rational_grid

# %%
member = homogeneous_family_build(HomogeneousFamilyParams.make(-1, 1, 1, 1))
print("r =", [str(v) for v in member.r])
print("closed forms agree:", member.closed_forms_agree)
print("square:", quartic_square_test(member.r))

# %% [markdown]
# Scan alpha = -1 over a small grid. The generic square test must agree
# with the two explicit conditions on (lambda, mu, nu).

# %%
vals = rational_grid([-2, -1, "-1/2", "1/2", 1, 2])
grid = []
for l, m, n in product(vals, repeat=3):
    p = HomogeneousFamilyParams.make(-1, l, m, n)
    if p.admissible():
        grid.append(p)
rows = family_parameter_scan(grid)
squares = [r for r in rows if r.verdict]
print(len(rows), "points,", len(squares), "squares")
print("consistent:", all(r.verdict == any(r.conditions) for r in rows))
for r in squares:
    print("  ", [str(v) for v in r.params.as_tuple()])

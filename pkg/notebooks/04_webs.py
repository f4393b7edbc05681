# %% [markdown]
# # Webs attached to a trivolution
#
# A first integral f0 and a trivolution T give three functions f0, f0 o T and
# f0 o T^2. We look for a linear relation among them.

# %%
from folcremona import BirationalMap, RationalFunction, WebTriple, abelian_relation, relation_residual

# %%
f0 = RationalFunction.parse("y + 1/(2*x^2)")
T = BirationalMap.parse("(j*x, y + (j - 1)/x^2)")
w = WebTriple.from_map(f0, T)
a = abelian_relation(w)
print("relation:", [str(c) for c in a])
print("residual is zero:", relation_residual(w, a).is_zero())

# %% [markdown]
# Three independent functions have no relation.

# %%
w = WebTriple(*(RationalFunction.parse(s) for s in ("x", "y", "x*y")))
print("relation:", abelian_relation(w))

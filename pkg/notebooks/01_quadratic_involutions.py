# %% [markdown]
# # Involutions from quadratic foliations
#
# A quadratic vector field X on the affine plane defines a birational map:
# send m to the second tangency point on the line through m spanned by X(m).
# That map is an involution.

# %%
from folcremona import (
    Foliation,
    fixed_curve,
    foliation_from_involution,
    inflection_polynomial,
    involution_from_quadratic,
    verify_period,
)
from folcremona import registry

# %%
F = Foliation.parse_field("x*(y^2 + x), y^3")
I = involution_from_quadratic(F)
print("I =", I)
print("period 2:", verify_period(I, 2))

# %% [markdown]
# The foliation is recovered from the involution up to a scalar.

# %%
rc = foliation_from_involution(I)
print("recovered:", rc.foliation.same_as(F))

# %% [markdown]
# Inflection curve and fixed curve of a builtin example.

# %%
J = registry.build("jouanolou2")
print("H =", inflection_polynomial(J))
IJ = involution_from_quadratic(J)
print("fixed curve:", fixed_curve(IJ))

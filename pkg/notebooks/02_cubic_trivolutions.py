# %% [markdown]
# # Trivolutions from cubic foliations
#
# For a cubic field the tangency polynomial has two nonzero roots. When its
# discriminant is kappa times a square, each root gives a birational map of
# period 3, and the two maps are inverse to each other.

# %%
from folcremona import compose, is_identity, trivolution_discriminant, trivolution_from_cubic, verify_period
from folcremona import registry
from folcremona.errors import ExtensionRequired

# %%
F = registry.build("cubic-rational")
d = trivolution_discriminant(F)
print("Delta =", d.delta)
tr = trivolution_from_cubic(F)
print("kappa =", tr.kappa)
print("T1 =", tr.T1)
print("period 3:", verify_period(tr.T1, 3))
print("T1 o T2 = id:", is_identity(compose(tr.T1, tr.T2)))

# %% [markdown]
# When the discriminant is not a square times a constant of the base field,
# the construction asks for an extension instead of guessing one.

# %%
for name in ("cubic-liouville", "cubic-fermat", "jouanolou3"):
    G = registry.build(name)
    try:
        t = trivolution_from_cubic(G)
    except ExtensionRequired as exc:
        print(name, "-> needs an extension:", exc)
        continue
    if t is None:
        print(name, "-> discriminant is not a square")
    else:
        print(name, "-> map of degree", t.T1.degree())

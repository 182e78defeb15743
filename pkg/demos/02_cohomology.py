# %% [markdown]
# # Boundary matrices and integer 3-cohomology
#
# For a solution R, a coloring of the 3-cube is permitted when its outgoing
# faces carry R applied to its incoming faces.  The boundary of the 3-cube
# gives an 8x2 matrix, the boundary of the 4-cube a 64x8 matrix, and the
# cohomology is ker(64x8) / im(8x2) over the integers.

# %%
from stte import RMap, cohomology3
from stte.cubecomplex import boundary3_matrix, boundary4_matrix, enumerate_permitted4_propagate, format_matrix

R = RMap.from_polys("0", "x+y+z", "0")
print(format_matrix(boundary3_matrix(R), header=["rows: input triple 000..111", "cols: colors 0, 1"]))

# %% [markdown]
# Permitted colorings of the 4-cube are fixed by the colors of six "source"
# faces, so there are 64 of them.

# %%
cols = enumerate_permitted4_propagate(R)
M4 = boundary4_matrix(R, cols)
print(len(cols), "permitted colorings; boundary matrix shape", M4.shape)

# %%
rep = cohomology3(R)
print("ker basis:", rep.kernel.basis)
print("im generator:", rep.im_generator)
print("H3 =", rep.h3, "  reduced by the all-ones cocycle:", rep.h3_reduced)

# %% [markdown]
# The identity map has no boundary at all in degree 4, so every cochain is
# a cocycle.

# %%
print(cohomology3(RMap.from_polys("x", "y", "z")).h3)

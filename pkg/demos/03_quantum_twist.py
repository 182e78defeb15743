# %% [markdown]
# # Twisting the linear operator by a cocycle
#
# The linear operator sends e_x (x) e_y (x) e_z to e_R(x,y,z).  Multiplying
# each column by t**w, where w is an integer 3-cocycle, keeps the quantum
# tetrahedron equation true; an arbitrary w does not.

# %%
from fractions import Fraction

from stte import Cocycle, RMap, build_qoperator, check_qte, cohomology3

R = RMap.from_polys("x", "z", "y")
kernel = cohomology3(R).kernel.basis
print("cocycle basis:", kernel)

# %%
w = kernel[0]
Q = build_qoperator(R, Cocycle(w, Fraction(3, 2)))
for row in Q:
    print(" ".join(f"{str(v):>4}" for v in row))
print("twisted equation holds:", check_qte(R, Cocycle(w, Fraction(3, 2))))

# %%
not_a_cocycle = (1, 0, 0, 0, 0, 0, 0, 0)
print("cocycle?", Cocycle(not_a_cocycle, 2).is_cocycle_for(R))
print("equation with it:", check_qte(R, Cocycle(not_a_cocycle, 2), check=False))

# %% [markdown]
# # Finding every two-color solution
#
# An R-operator on X = {0, 1} is a triple of Boolean functions of (x, y, z).
# There are 2^24 such triples; we check all of them against the
# tetrahedron equation and then group the survivors by the two symmetries
# (argument reversal and color flip).

# %%
import time

from stte import RMap, enumerate_solutions, histogram_by_image_cardinality, orbit_decomposition
from stte import image_cardinality, satisfies_stte

t0 = time.perf_counter()
solutions = enumerate_solutions()
print(f"{len(solutions)} solutions in {time.perf_counter() - t0:.1f}s")

# %% [markdown]
# Most solutions are degenerate: their image is smaller than X^3.

# %%
print(histogram_by_image_cardinality(solutions))

# %%
swap = RMap.from_polys("y", "x", "z")
reverse = RMap.from_polys("z", "y", "x")
print(swap, satisfies_stte(swap))
print(reverse, satisfies_stte(reverse))

# %% [markdown]
# Orbits have size 1, 2 or 4.  Print the first few with their edges.

# %%
orbits = orbit_decomposition(solutions)
for orbit in orbits[:6]:
    members = ", ".join(str(R) for R in orbit.members)
    edges = [f"{a} -{label}- {b}" for a, b, label in orbit.edges]
    print(f"card {image_cardinality(orbit.members[0])}: {members}")
    for e in edges:
        print("   ", e)
    if orbit.self_symmetries:
        print("    fixed by", ", ".join(sorted(orbit.self_symmetries)))

# %% [markdown]
# # Checking against the published catalogue
#
# The package ships a transcription of the 406 catalogued solutions,
# including the printed kernel and image matrices for the entries whose
# cohomology is more than the trivial part.

# %%
from collections import Counter

from stte import enumerate_solutions
from stte.catalogue import analyze, build_records, compare, emit_text, load_reference

ref = load_reference()
solutions = enumerate_solutions()
reports = analyze(solutions)
diff = compare(solutions, ref, reports)
print(diff)

# %% [markdown]
# Which groups occur among the nontrivial cases?

# %%
groups = Counter(str(r.h3_reduced) for r in reports.values() if r.nontrivial)
for g, n in groups.most_common():
    print(f"{n:3d}  {g}")

# %%
print(emit_text(build_records(solutions, reports, ref))[:1200])

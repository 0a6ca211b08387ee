"""Print the nontrivial Rouquier blocks of G7 for every essential hyperplane."""
import time

from rouquier import all_blocks, load_group
from rouquier.blockengine import format_hyperplane

t = time.perf_counter()
W = load_group("G7")
records = all_blocks(W)
for r in records:
    head = "No essential hyperplane" if r.hyperplane is None else format_hyperplane(r.hyperplane, W.var_names)
    parts = ["{" + ", ".join(W.labels[i] for i in p) + "}" for p in r.partition.nontrivial()]
    print(head)
    print("   " + "  ".join(parts))
print(f"\n{len(records) - 1} essential hyperplanes, {time.perf_counter() - t:.1f}s")

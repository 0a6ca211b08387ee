"""Walk through the G4 example: characters, all blocks, one specialisation, essential hyperplanes."""
from rouquier import all_blocks, essential_hyperplanes, load_group, rouquier_blocks
from rouquier.blockengine import PrimeDoesNotDivideOrder, format_hyperplane
from rouquier.cli import parse_params

W = load_group("G4")
print("characters:", list(W.labels))

print("\nall blocks")
for r in all_blocks(W):
    cond = list(r.hyperplane) if r.hyperplane else []
    print(f"  cond={cond!s:<12} block={r.partition.to_list()}")

n = parse_params("1,E3*x,E3^2*x^2", W)
B = rouquier_blocks(W, n)
print(f"\nparameters 1, E3*x, E3^2*x^2  ->  n = {n}")
print("  blocks:", B.to_list())
print("  labels:", [[W.labels[i] for i in p] for p in B.parts])

for p in (0, 2, 3, 5):
    try:
        hs = essential_hyperplanes(W, p)
        print(f"\nessential hyperplanes, p={p}:", ", ".join(format_hyperplane(h, W.var_names) for h in hs))
    except PrimeDoesNotDivideOrder as e:
        print(f"\nessential hyperplanes, p={p}: Error, {e}")

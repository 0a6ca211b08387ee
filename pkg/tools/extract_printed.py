"""Extract the printed G7 and G6 Rouquier block tables from the source text.

Writes tests/golden/printed_blocks.json with, per group, an ordered list of
[heading, [[label, ...], ...]] entries (only non-trivial parts are printed),
plus the G7 -> G6 induction table.
"""
import json
import re
import sys
from pathlib import Path

if len(sys.argv) != 2:
    raise SystemExit("usage: python3 tools/extract_printed.py SOURCE.md")
src = Path(sys.argv[1]).read_text()


def labels_in(text):
    text = re.sub(r"\s+", "", text).replace("\\\\", "")
    return [
        f"phi{{{m.group(1)},{m.group(2)}}}{m.group(3) or m.group(4)}"
        for m in re.finditer(r"\\(?:phi|psi)_\{(\d+),(\d+)('*)\}('*)", text)
    ]


def parse_description(block):
    items = block.split("\\item[")[1:]
    out = []
    for it in items:
        head, body = it.split("]", 1)
        head = head.replace("$", "").strip()
        parts = [labels_in(p) for p in re.findall(r"\\\{(.*?)\\\}", body, flags=re.S)]
        out.append([head, parts])
    return out


start = src.index("\\item[No essential hyperplane]")
g7_end = src.index("\\end{description}", start)
g7 = parse_description(src[src.rindex("\\begin{description}", 0, start):g7_end])
start6 = src.index("\\item[No essential hyperplane]", g7_end)
g6_end = src.index("\\end{description}", start6)
g6 = parse_description(src[src.rindex("\\begin{description}", 0, start6):g6_end])

ind_block = src[src.index("\\mathrm{Ind}_{\\bar{A}}^A", g7_end):start6]
induction = []
for m in re.finditer(r"\\mathrm\{Ind\}_\{\\bar\{A\}\}\^A\((.*?)\)\s*&\s*=\s*&(.*?)(?:&|\\\\|\\end)", ind_block, flags=re.S):
    induction.append([labels_in(m.group(1))[0], labels_in(m.group(2))])


# the G4 session: DisplayAllBlocks, AllBlocks, RouquierBlocks, EssentialHyperplanes


def verbatim_after(marker):
    i = src.index(marker) + len(marker)
    return src[i:src.index("\\end{verbatim}", i)]


disp = verbatim_after("gap> DisplayAllBlocks(W);")
g4 = []
for m in re.finditer(r"^(No essential hyperplane|[a-z0-9_+\-]+=0)\n(.*?)(?=^No essential|^[a-z0-9_+\-]+=0\n|\Z)", disp, flags=re.S | re.M):
    g4.append([m.group(1), json.loads(re.sub(r"\s+", "", m.group(2)))])

allb = verbatim_after("gap> AllBlocks(W);")
records = [
    [json.loads(c.replace(" ", "")), json.loads(re.sub(r"\s+", "", b))]
    for c, b in re.findall(r"cond:=(\[.*?\]),\s*block:=(\[\[.*?\]\])\)", allb, flags=re.S)
]
names = json.loads(re.sub(r"\s+", "", verbatim_after("gap> CharNames(W);")))
rb = verbatim_after("gap> RouquierBlocks(H);").split("gap> DisplayRouquierBlocks(H);")
rouquier = {
    "params": "1,E3*x,E3^2*x^2",
    "indices": json.loads(re.sub(r"\s+", "", rb[0])),
    "labels": json.loads(re.sub(r"\s+", "", rb[1])),
}
ess_text = src[src.index("gap> EssentialHyperplanes(W,0);"):]
ess_text = ess_text[:ess_text.index("\\end{verbatim}")]
ess = {}
for chunk in ess_text.split("gap> EssentialHyperplanes(W,")[1:]:
    p, body = chunk.split(");", 1)
    ess[p] = [l.strip() for l in body.strip().splitlines() if l.strip()]

json.dump({"G7": g7, "G6": g6, "G4": g4, "induction_G6_in_G7": induction,
           "G4_char_names": names, "G4_all_blocks": records,
           "G4_rouquier_blocks": rouquier, "G4_essential_hyperplanes": ess},
          open("tests/golden/printed_blocks.json", "w"), indent=1)
print(len(g7), len(g6), len(g4), len(records), len(induction))

# published tables for --certified: heading -> non-trivial parts, per group
published = {
    name: [[h, [p for p in parts if len(p) > 1]] for h, parts in recs]
    for name, recs in (("G4", g4), ("G6", g6), ("G7", g7))
}
out = Path("src/rouquier/data/published")
out.mkdir(parents=True, exist_ok=True)
(out / "blocks.json").write_text(json.dumps(published, indent=1) + "\n")

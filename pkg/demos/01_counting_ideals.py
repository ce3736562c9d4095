"""How many ideals does each root poset have?

Walks through enumeration on a small case, then compares the antichain
count with the product over Weyl exponents for every type in the suite.
"""
from ideal_arrangements import build_root_system, enumerate_ideals, count_ideals, ideal_exponents
from ideal_arrangements.ideals import predicted_counts
from ideal_arrangements.idealtype import table_counts_by_height

rs = build_root_system("B3")
print(f"{rs.name}: {len(rs.positive_roots)} positive roots, Coxeter number {rs.coxeter_number}")
for I in list(enumerate_ideals(rs))[:8]:
    gens = ", ".join(I.generator_strings()) or "-"
    print(f"  generators [{gens}]  exponents {ideal_exponents(I).values}")
print(f"  ... {count_ideals(rs)} ideals in all, {count_ideals(rs, 'strictly_positive')} avoid the simple roots")

print("\nenumeration vs product formula")
for name in ["A5", "B5", "C5", "D6", "G2", "F4", "E6", "E7", "E8"]:
    rs = build_root_system(name)
    want = predicted_counts(rs)
    got = count_ideals(rs), count_ideals(rs, "strictly_positive")
    print(f"  {name:3} {got[0]:6} {got[1]:6}   formula {want['all']:6} {want['strictly_positive']:6}")

# ideals squeezed under the t-th height ideal shrink quickly as t grows
print("\nideals inside the height-t ideal, t = 1, 2, ...")
for name in ["F4", "E6"]:
    counts = table_counts_by_height(build_root_system(name), 5)
    print(f"  {name}: {list(counts.values())}")

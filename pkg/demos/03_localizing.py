"""Reducing an ideal to a maximal parabolic subsystem.

When the roots of a maximal standard subsystem cut out a modular coatom of
the arrangement, freeness passes from the localization to the whole thing
and one new exponent appears.  Here is the F4 example worked by hand, then
the census that counts how often some subsystem does the job.
"""
from ideal_arrangements import (build_root_system, parse_ideal, ideal_exponents,
                                check_condition, reduce_via_condition)
from ideal_arrangements.idealtype import condition_subsystems, classification_counts

rs = build_root_system("F4")
I = parse_ideal(rs, "[0121]")
print(f"F4, ideal [0121], exponents {ideal_exponents(I).values}")
for p in rs.maximal_parabolics():
    w = check_condition(rs, I, p)
    if w is None:
        print(f"  {p.name}: fails")
        continue
    red = reduce_via_condition(rs, I, w)
    print(f"  {p.name}: boundary {[rs.format_root(k) for k in w.boundary_roots]},"
          f" localization keeps {len(red.localized)} planes, new exponent {red.new_exponent}")

print("\nall subsystems that work for the principal ideals of height 4 in E6:")
e6 = build_root_system("E6")
for k in e6.members(e6.height_masks[4]):
    J = parse_ideal(e6, f"[{e6.format_root(k)}]")
    names = [w.phi0.name for w in condition_subsystems(e6, J)]
    print(f"  {e6.format_root(k)}  {names or 'none'}")

print("\nhow many ideals are settled by reducibility or a working subsystem:")
for name in ["G2", "F4", "E6"]:
    c = classification_counts(build_root_system(name))
    print(f"  {name}: {c['classified']}/{c['all']}  {c['tags']}")

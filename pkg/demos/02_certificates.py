"""Three kinds of freeness certificate on D4, and what a verifier does with them.

The ideal generated by the root 1111 gives an arrangement with ten
planes that is inductively factored but not supersolvable.  We produce
each certificate we can, replay it, then tamper with one and watch the
verifier refuse it.
"""
import copy
import json

from ideal_arrangements import (build_root_system, parse_ideal, arrangement_of_ideal_type,
                                inductively_free, supersolvable, inductively_factored,
                                verify_certificate)
from ideal_arrangements.freecert import CertificateError, nice_partitions
from ideal_arrangements.ideals import height_ideal

rs = build_root_system("D4")
I = parse_ideal(rs, "[1111]")
arr = arrangement_of_ideal_type(rs, I)
print(f"D4, ideal [1111]: {len(arr)} hyperplanes, rank {arr.rank}")

for label, fn in [("supersolvable", supersolvable), ("inductively free", inductively_free),
                  ("inductively factored", inductively_factored)]:
    v = fn(arr)
    print(f"  {label:22} {v.status:14} exponents {v.exponents}")
    if v.certificate is not None:
        verify_certificate(v.certificate)

fac = inductively_factored(arr).certificate
print(f"\nblock sizes of the factorization found: {sorted(len(b) for b in fac['partition'])}")

table = inductively_free(arr).certificate
print(f"\ninduction table: {len(table['rows'])} rows, first three:")
for row in table["rows"][:3]:
    print(f"  add {row['hyperplane']}: {row['exponents_before']} -> {row['exponents_after']}")

bad = copy.deepcopy(table)
bad["rows"][5]["exponents_after"][0] += 1
try:
    verify_certificate(bad)
except CertificateError as e:
    print(f"\ntampered table rejected: {e}")

# one height higher there is no nice partition at all
arr5 = arrangement_of_ideal_type(rs, height_ideal(rs, 5))
print(f"\nheight-5 ideal: nice partitions found = {len(list(nice_partitions(arr5)))}")
print(f"certificate size in JSON: {len(json.dumps(table))} bytes")

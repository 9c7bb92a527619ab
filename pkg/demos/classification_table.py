"""Search the genus-two numeric types and whittle them down to four.

The search window is adjoint square 1..3; five candidate rows come out.
One of them needs a plane curve with seven points of multiplicity 5, and
counting images of the triple points rules it out.  The four survivors
are exactly the built-in models A, B1, B2, C.
"""

from genus2pencils import catalog
from genus2pencils.numerics import (
    apply_exclusion,
    search_general,
    search_special,
    triple_point_image_obstruction,
)

rows = search_general(2, 1, 3)
print(f"general search, adjoint square 1..3: {len(rows)} rows")
for r in rows:
    mults = " ".join(str(m) for m in r.multiplicities)
    print(
        f"  degree {r.pencil_degree:2d}  offset {r.twice_offset}  "
        f"ksq {r.adjoint_square}  points {r.base_point_count:2d}  mults {mults}"
    )

# the special branch (pencil through a single point of higher multiplicity)
# contributes nothing in this window
assert search_special(2, 1, 3) == ()
print("special search: empty")

# the last row would need 7 points of multiplicity 5 on a degree-10 pencil.
# blowing down to the plane forces the images of certain triple points to
# pair with the anticanonical class in degree 1; the actual minimum over
# both case families is 2.
cert = triple_point_image_obstruction()
print(
    f"\nexclusion: row {cert.excluded.multiplicities} requires anticanonical "
    f"degree {cert.required_degree}, cases give minima {cert.case_minima} "
    f"over {cert.case_counts} configurations -> contradiction"
)

kept = apply_exclusion(rows)
print(f"\nsurvivors: {len(kept)}")
for row, tag in zip(kept, ("A", "B1", "B2", "C")):
    entry = catalog.get(tag)
    assert row == entry.expected.numeric
    plane = entry.expected.plane
    sing = " ".join(str(m) for m in plane.multiplicities)
    print(f"  {tag}: plane degree {plane.degree}, singular multiplicities {sing}")

"""
The orbit category of S3
========================

Objects are the six subgroups; hom(x, y) is the set of cosets gx with
y inside g x g^-1.  We compare against a brute-force count of
equivariant maps S3/y -> S3/x.
"""

import numpy as np

from cyclicdual import instances
from cyclicdual.orbit_cat import equivariant_map_count

inst = instances.build("s3-orbit")
labels = inst.labels
counts = np.array([[len(inst.homs[x, y]) for y in range(inst.size)] for x in range(inst.size)])
oracle = np.array([[equivariant_map_count(inst.cm.A, inst.presheaf[x], inst.presheaf[y])
                    for y in range(inst.size)] for x in range(inst.size)])

print("rows: source, columns: target")
print("          " + " ".join(f"{lab:>8}" for lab in labels))
for lab, row in zip(labels, counts):
    print(f"{lab:>9} " + " ".join(f"{v:>8}" for v in row))
print("matches brute force:", bool((counts == oracle).all()))

"""
When the induced cosieve degenerates
====================================

x ⋐ y holds when x <= y and G_{y°} together with G_x generates G.
Proper subgroups make it empty, the whole group makes it all of <=.
"""

from cyclicdual import instances
from cyclicdual.equivariant_preorder import cosieve_from_duality


def induced(name):
    inst = instances.build(name)
    return inst, cosieve_from_duality(inst.cm, inst.preorder, inst.presheaf, inst.duality)


for name in ("z30-primes", "s3-trivial-duality", "s3-whole", "z6-two-normals"):
    inst, rel = induced(name)
    pairs = [(inst.labels[x], inst.labels[y]) for x, y in rel.pairs()]
    print(f"{name:>20}: {len(pairs)} pairs, equals <=: {rel.rel == inst.preorder.leq}  {pairs[:4]}")

# with an empty cosieve every hom-set collapses to one class
inst = instances.build("z30-primes")
print("z30-primes ho classes:",
      {f"{inst.labels[x]}->{inst.labels[y]}": len(ms) for (x, y), ms in inst.ho_homs.items() if ms})

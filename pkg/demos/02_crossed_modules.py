"""
Crossed modules and their validator
===================================

A crossed module is t: G -> A with an action of A on G by automorphisms.
The validator scans every axiom and reports witnesses.
"""

from cyclicdual.crossed_module import CrossedModule, conjugation_module, validate
from cyclicdual.finite_group import cyclic_group, symmetric_group
from cyclicdual.report import format_text

S3 = symmetric_group(3)
cm = conjugation_module(S3)
print(format_text([validate(cm)]))

# break the action of (1 2) by swapping the images of the two 3-cycles
act = [list(row) for row in cm.act]
h, a, b = S3.element("(1 2)"), S3.element("(1 2 3)"), S3.element("(1 3 2)")
act[h][a], act[h][b] = act[h][b], act[h][a]
broken = CrossedModule(cm.G, cm.A, cm.t, tuple(map(tuple, act)))
rep = validate(broken)
print(format_text([rep], max_items=4))
print("violated axioms:", sorted(rep.codes()))

# for an abelian group conjugation is trivial
Z6 = cyclic_group(6)
print("Z6 action rows all identity:",
      all(row == tuple(range(6)) for row in conjugation_module(Z6).act))

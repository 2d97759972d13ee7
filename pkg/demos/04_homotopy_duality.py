"""
Duality on the homotopy category
================================

On s3-collapse the two cosets pt -> pt stay apart under the congruence,
and the duality [g G_x] -> [g^-1 G_y°] fixes both classes.  On
s3-orbit-dual the tubular condition fails and the lift is refused.
"""

from cyclicdual import instances
from cyclicdual.orbit_cat import (TubularConditionFailed, describe_class, dual_morphism,
                                  theorem_reports)
from cyclicdual.report import format_text

inst = instances.build("s3-collapse")
for m in inst.ho_homs[0, 0]:
    print(describe_class(inst, m), "->", describe_class(inst, dual_morphism(inst, m)))

reports = theorem_reports(inst)
print(f"{sum(r.ok for r in reports)}/{len(reports)} checks pass")

bad = instances.build("s3-orbit-dual")
try:
    dual_morphism(bad, bad.ho_homs[0, 0][0])
except TubularConditionFailed as exc:
    print(format_text([exc.report], max_items=4))

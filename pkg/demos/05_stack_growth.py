"""
Stack areas grow cubically
==========================

The worst-case stack profile over a height h has area bounded by
92 k (h^3 + l h^2). A log-log fit of the area recovers the exponent 3, as
does the lower-bound sum.
"""

import numpy as np

from bbdehn.stacks import (
    StackParams,
    growth_exponent,
    lower_bound_area,
    stack_area,
    verify_cubic_bound,
    worst_case_stack_profile,
)

p = StackParams(k=3, l=2, h=3)
print("profile", worst_case_stack_profile(p), "area, bound, ok:", verify_cubic_bound(p))

hs = np.unique(np.geomspace(16, 512, 24).astype(int))
areas = [stack_area(worst_case_stack_profile(StackParams(3, 4, int(h)))) for h in hs]
print("upper exponent %.3f" % growth_exponent(list(zip(hs, areas))))

# ratio to h^3 settles down
for h, a in list(zip(hs, areas))[::6]:
    print(h, a, round(a / h ** 3, 2))

rs = range(16, 513)
print("lower exponent %.3f" % growth_exponent([(r, lower_bound_area(1, r)) for r in rs]))

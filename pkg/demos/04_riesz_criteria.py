"""The two summation criteria in action, on systems that pass and fail.

A system assigns one eigenfunction per curve index.  The first criterion
sums the explicit distance bounds C_n and certifies strong quadratic
nearness when the total stays below pi/2; the second only needs the even
tail sum (max(sqrt(alpha), sqrt(beta))/n - 1)^2 to converge once every
odd entry is the plain sine.  Both are one-sided: "inconclusive" never
claims the opposite.
"""

import math

from fucik import (
    BranchRule,
    FinitePerturbation,
    GammaLine,
    PowerFamily,
    complete_point,
    theorem1_check,
    theorem2_check,
)


def show(label, report):
    print(f"{label}:")
    print(f"  partial = {report.partial_sum:.6f}, tail <= {report.tail_bound:.6f}, "
          f"total <= {report.total_upper:.6f} (threshold {report.threshold:g})")
    print(f"  verdict: {report.verdict}\n")


print(f"pi/2 = {math.pi / 2:.6f}\n")

show("all-diagonal system (plain sines)", theorem1_check(FinitePerturbation(())))

single = FinitePerturbation((complete_point(2, alpha=9.0),))
show("single perturbation n = 2, alpha = 9 (criterion 1)", theorem1_check(single))
print("  note: the criterion is sufficient only; this verdict does not refute basisness\n")

half_caps = PowerFamily(epsilon=0.5,
                        even=BranchRule(cap_fraction=0.5),
                        odd=BranchRule(cap_fraction=0.5, side="alpha"))
show("power family at 50% of the growth caps, eps = 0.5 (criterion 1)",
     theorem1_check(half_caps))

even_only = PowerFamily(epsilon=0.5, even=BranchRule(c=0.4))
show("diagonal odd entries, even growth c = 0.4 (criterion 2)",
     theorem2_check(even_only))

show("dilation line gamma = 5 (criterion 2: constant terms diverge)",
     theorem2_check(GammaLine(5.0)))

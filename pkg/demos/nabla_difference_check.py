"""Where a composed nabla difference of a power actually vanishes.

nabla_poch_diff applies a fractional nabla difference of order alpha to
the rising power (t - a)_p and evaluates it t_index steps past the
origin.  When alpha - p is a positive integer m, the result vanishes,
but only from t_index = 1 + m on.  The first grid point is nonzero, and
the exact arithmetic pins down its value.
"""
from fractions import Fraction as Q

from deltafrac import nabla_poch_diff, run_identity

# order alpha = 3/2 on the power p = 1/2: m = 1
value = nabla_poch_diff(0, Q(1, 2), Q(3, 2), 1)
print("value at the first point:", value.render())
print("as a float:", value.to_float())

# from the second point on, everything cancels
for t_index in range(2, 6):
    print(f"t_index = {t_index}:", nabla_poch_diff(0, Q(1, 2), Q(3, 2), t_index).render())

# m = 2 moves the vanishing threshold one step further out
print("m = 2, t_index = 2:", nabla_poch_diff(0, Q(1, 2), Q(5, 2), 2).render())
print("m = 2, t_index = 3:", nabla_poch_diff(0, Q(1, 2), Q(5, 2), 3).render())

# the origin drops out of the sum entirely
same = {str(nabla_poch_diff(a, Q(1, 3), Q(4, 3), 2)) for a in (0, Q(1, 4), -2)}
print("origin-independent:", same)

# the registered sweep checks the vanishing claim over a grid of
# origins, powers and orders; every report must be exactly zero
reports = list(run_identity("nabla-zero"))
print(len(reports), "vanishing points checked:", {r.status for r in reports})

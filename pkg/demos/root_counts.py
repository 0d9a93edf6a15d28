# Counting real roots
#
# Sturm chains over the rationals give the exact number of distinct real
# roots.  A polynomial is real-rooted when that count equals its
# squarefree degree.

from borosmoll.realroots import UniPoly, build_P, count_real_roots, root_report

print(count_real_roots(UniPoly([-1, 0, 1])))
print(count_real_roots(UniPoly([1, 0, 1])))

# P_2 itself has no real roots.

print(build_P(2).coeffs, count_real_roots(build_P(2)))

# The two companion polynomials stay real-rooted.

for m in (1, 5, 10, 20):
    print(root_report("Q", m), root_report("R", m)["real_rooted"])

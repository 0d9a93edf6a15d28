# 2-log-concavity sweep
#
# Apply the L operator twice and check the result is still log-concave.
# The check uses cross-multiplication only, so it is exact.

import time

from borosmoll import check_2lc, klc_depth, l_operator, row

r = row(6)
print([str(x) for x in l_operator(list(r))])
print("depth (capped at 4):", klc_depth(list(r), 4))

t0 = time.perf_counter()
reports = [check_2lc(row(m)) for m in range(2, 126)]
print("rows 2..125 pass:", all(rep.passed for rep in reports))
print("inequalities checked:", sum(rep.checked for rep in reports))
print(f"{time.perf_counter() - t0:.1f}s")

# A sequence that fails, for contrast.

print(klc_depth([1, 2, 3, 1], 3))

# Coefficient rows
#
# The rows d_i(m) are rationals with a power-of-two denominator.  Three
# independent engines build them; here we compare them and look at the
# scaled integer form.

from borosmoll import ratio, row, row_double_sum, row_single_sum

for m in range(5):
    r = row(m)
    print(m, r.scaled(), [str(x) for x in r])

# The engines agree entrywise.

print(all(row_single_sum(m) == row_double_sum(m) == row(m) for m in range(30)))

# The growth ratio d_i(m+1)/d_i(m) is about 2 at i = 0 and about 2m at the top.

m = 40
print([float(ratio(m, i)) for i in (0, 1, 10, 39, 40)])

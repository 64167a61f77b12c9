# The running example: three stars glued along a weighted path b -> c.
import time

from matchpow import is_linearly_related, matching_power, monomial_grade, read_ideal

text = """vars: x_1..x_12, a, b, c
ideal(x_1, x_2, x_3, x_4, x_5) * ideal(a^3)
  + ideal(x_5, x_6, x_7, x_8, x_9) * ideal(b^3)
  + ideal(x_10, x_11, x_12, b) * ideal(c^3)
"""

start = time.perf_counter()
I = read_ideal(text)
print(len(I), "generators in", I.context.n, "variables")
print("I^[1] == I:", matching_power(I, 1) == I)
print("linearly related:", is_linearly_related(I))  # b*c^3 sits in degree 4

I3 = matching_power(I, 3)
print("I^[3] has", len(I3), "generators, linearly related:", is_linearly_related(I3))
print("monomial grade:", monomial_grade(I))
print("I^[4] is zero:", matching_power(I, 4).is_zero())
print(f"{time.perf_counter() - start:.3f} s")

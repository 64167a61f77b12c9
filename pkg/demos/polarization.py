from matchpow import depth, g_function, matching_power, monomial_grade, polarize_ideal, read_ideal

I = read_ideal("vars: x, y, z\nideal(x^2*y, x*z^2, y^3, z)")
P = polarize_ideal(I)
print(I)
print(P)  # one fresh variable per exponent step, named x_1, x_2, ...

bound = I.bounding_multidegree
print("bounding multidegree", bound, "size", sum(bound))
print("grade", monomial_grade(I), monomial_grade(P))

# matching powers commute with polarization when the bound is fixed
for k in range(1, monomial_grade(I) + 1):
    Ik = matching_power(I, k)
    same = polarize_ideal(Ik, bound) == matching_power(P, k)
    shift = depth(matching_power(P, k)) - depth(Ik)
    print(k, Ik, same, "depth shift", shift)

# ... so the normalized depth function does not see the polarization
print(g_function(I).values, g_function(P).values)

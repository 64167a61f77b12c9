from matchpow import betti_table, g_function, projective_dimension, read_ideal

ci = read_ideal("vars: x1..x4\nideal(x1*x2, x3*x4)")
B = betti_table(ci)
print(B)
print(B.quotient())
print("pd", projective_dimension(ci))

triangle = read_ideal("vars: x, y, z\nideal(x*y, y*z, x*z)")
print(betti_table(triangle))

# Stanley-Reisner ideal of the six-vertex projective plane: torsion shows up over F2
rp2 = read_ideal(
    "vars: x1..x6\n"
    "ideal(x1*x2*x4, x1*x2*x5, x1*x3*x5, x1*x3*x6, x1*x4*x6,"
    " x2*x3*x4, x2*x3*x6, x2*x5*x6, x3*x4*x5, x4*x5*x6)"
)
print(betti_table(rp2, 0))
print(betti_table(rp2, 2))

prof = g_function(ci)
print("nu", prof.nu, "g", prof.values, "depth", prof.depth, "indeg", prof.indeg)
print(prof.to_json())

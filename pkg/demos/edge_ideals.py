import itertools

from matchpow import (
    SimpleGraph,
    WeightedOrientedGraph,
    edge_ideal,
    edge_ideal_oriented,
    enumerate_matchings,
    matching_number,
    matching_power,
    monomial_grade,
)

C6 = SimpleGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
I = edge_ideal(C6)
print(I)
print("matching number", matching_number(C6), "grade", monomial_grade(I))
for k in range(1, 4):
    print(k, len(enumerate_matchings(C6, k)), matching_power(I, k))

K5 = SimpleGraph.from_edges(5, itertools.combinations(range(5), 2))
print(matching_power(edge_ideal(K5), 2))  # all squarefree quartics

# weights sit on the head of each arc
D = WeightedOrientedGraph.from_names(["x", ("a", 2), "y", "z"], [("x", "a"), ("y", "z"), ("a", "y"), ("x", "z")])
J = edge_ideal_oriented(D)
print(J)
print(matching_power(J, 2))  # one of the two perfect matchings is swallowed by the other

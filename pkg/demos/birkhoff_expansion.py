"""Write an Erdős matrix as a convex combination of permutation matrices.

The forced expansion starts from a chosen inner permutation, which then
always gets a positive coefficient.
"""
from erdosmat import as_matrix, birkhoff_decompose, birkhoff_decompose_through, inner_permutations, skel

E3 = as_matrix([["3/5", "2/5", 0], ["2/5", "1/5", "2/5"], [0, "2/5", "3/5"]])

greedy = birkhoff_decompose(E3)
for coeff, sigma in zip(greedy.coefficients, greedy.permutations):
    print(coeff, sigma.to_list())

inner = inner_permutations(skel(E3))
print(f"\n{len(inner)} inner permutations")
forced = birkhoff_decompose_through(E3, inner[-1])
print("forced through", inner[-1].to_list())
for coeff, sigma in zip(forced.coefficients, forced.permutations):
    print(coeff, sigma.to_list())
assert (forced.matrix() == E3).all()

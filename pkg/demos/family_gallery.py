"""Build one matrix from each construction and check it.

Every member of the three families is RCDS and Erdős; the (u, v)
vectors come straight from the construction.
"""
from erdosmat import AlphaSpec, ZigzagSpec, family_uv_vectors, format_matrix, is_erdos, is_rcds, make_x_alpha, make_x_rsn, make_zigzag, maxtrace

examples = {
    "X(2,1,3)": make_x_rsn(2, 1, 3),
    "zigzag r=(2,3) s=(1,2,2)": make_zigzag(ZigzagSpec((2, 3), (1, 2, 2))),
    "alpha p=2 a=(1,1,2,2)": make_x_alpha(AlphaSpec.circulant(2, (1, 1, 2, 2))),
}

for name, M in examples.items():
    print(name)
    print(format_matrix(M), end="")
    print(f"rcds={is_rcds(M)} erdos={is_erdos(M)} maxtrace={maxtrace(M)[0]}\n")

spec = ZigzagSpec((2, 3), (1, 2, 2))
d = family_uv_vectors(spec)
print("zigzag u:", [str(x) for x in d.u])
print("zigzag v:", [str(x) for x in d.v])

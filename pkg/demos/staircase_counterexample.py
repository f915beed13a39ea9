"""A three-block staircase that is RCDS with equal inner traces, yet not Erdős.

An outer permutation picks up more weight than any inner one, so the
outer-permutation criterion fails and the maxtrace exceeds the norm.
"""
from erdosmat import erdos_criterion, format_matrix, frobenius_norm_sq, inner_trace_set, is_erdos, is_rcds, maxtrace, make_zigzag, uv_decompose
from erdosmat.families import STAIRCASE_COUNTEREXAMPLE

M = make_zigzag(STAIRCASE_COUNTEREXAMPLE)
print(format_matrix(M), end="")

print("rcds:", is_rcds(M))
print("inner traces:", sorted(str(t) for t in inner_trace_set(M)))
print("squared norm:", frobenius_norm_sq(M))

value, sigma = maxtrace(M)
print("maxtrace:", value, "at", sigma.to_list())

d = uv_decompose(M)
print("u:", [str(x) for x in d.u])
print("v:", [str(x) for x in d.v])
print("criterion holds:", erdos_criterion(d))
print("erdos:", is_erdos(M))

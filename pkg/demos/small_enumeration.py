"""Enumerate every Erdős matrix up to size 4 and print the extremal ones.

Run with ``python3 demos/small_enumeration.py``.
"""
from erdosmat import enumerate_erdos, format_matrix, max_denominator

for n in range(1, 5):
    report = enumerate_erdos(n)
    print(report.summary_line())

# the record with the largest common denominator at n = 4
report = enumerate_erdos(4)
top = max_denominator(report)
print(f"\nlargest denominator at n=4: {top.common_denominator}")
print(format_matrix(top.matrix), end="")
print(f"maxtrace {top.maxtrace}, skeleton {top.skeleton.to_hex()}")

# why the other skeletons fail
print(f"\nfailures: shrink={report.shrink_count} negative={report.negative_count} "
      f"excess={report.outer_excess_count} both={report.both_count}")

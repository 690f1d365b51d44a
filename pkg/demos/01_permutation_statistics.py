"""
Permutation statistics and the overlined-word descent set.

Permutations act on the right in one-line notation: the word 6,4,1,5,3,2
sends 1 -> 6, 2 -> 4, and so on.  The statistics driving everything else
in this package are the excedance count, the major index, and the descent
set of the word obtained by overlining the excedance letters.
"""
from eulerian_csp import (
    Permutation,
    dex_set,
    enumerate_by_type,
    parse_permutation,
    perm_statistics,
    Partition,
)

sigma = parse_permutation("6,4,1,5,3,2")
st = perm_statistics(sigma)

print("sigma          :", sigma)
print("excedance set  :", sorted(st.exc_set))
print("descent set    :", sorted(st.des_set))
print("major index    :", st.maj)
print("Dex(sigma)     :", sorted(dex_set(sigma)))
print("maj - exc      :", st.maj - st.exc, "(always equals sum of Dex)")
print()

# Excedances and descents are equidistributed over S_n, even though they
# differ permutation by permutation.
n = 5
exc_hist: dict[int, int] = {}
des_hist: dict[int, int] = {}
import itertools

for word in itertools.permutations(range(1, n + 1)):
    s = perm_statistics(Permutation(word))
    exc_hist[s.exc] = exc_hist.get(s.exc, 0) + 1
    des_hist[s.des] = des_hist.get(s.des, 0) + 1
print(f"S_{n} excedance histogram:", dict(sorted(exc_hist.items())))
print(f"S_{n} descent   histogram:", dict(sorted(des_hist.items())))
print()

# Permutations of one cycle type, refined by excedance count.
lam = Partition((2, 2, 1))
print(f"cycle type {lam}, by excedances:")
for j in range(lam.n):
    block = enumerate_by_type(lam, j)
    if block:
        print(f"  j={j}: {[str(s) for s in block]}")

"""Smoke test for the ppsearch extension module."""

import ppsearch

gf25 = ppsearch.Field(25)
assert (gf25.q, gf25.p, gf25.m) == (25, 5, 2)
assert gf25.prim_poly == [1, 3, 3]
for x in range(1, 25):
    assert gf25.mul(x, gf25.inv(x)) == 1
    assert gf25.add(x, gf25.sub(0, x)) == 0

gf27 = ppsearch.Field(27)
p = ppsearch.Poly.parse(gf27, "1,0,0,0,0,0,0,0,1,0")
assert p.degree == 9 and p.is_permutation(gf27)
assert ppsearch.Poly([1, 0, 0, 0, 0, 0, 0, 0, 0, 0]).is_complete(gf27)

gf11 = ppsearch.Field(11)
report = ppsearch.search(gf11, 7, members=True)
assert report.summary() == "11 7 225 28 272250", report.summary()
assert sum(c.size for c in report.classes) == report.npps
assert all(m.is_npp(gf11) and m.is_permutation(gf11) for c in report.classes for m in c.members)
assert ppsearch.brute_force(ppsearch.Field(7), 4) == ppsearch.search(ppsearch.Field(7), 4).total

rep = report.classes[0].representative
cls = ppsearch.equiv_class(gf11, rep)
assert cls.size == report.classes[0].size and rep in cls.members

normal, a, b, c = ppsearch.Poly([3, 5, 0, 2]).normalize(gf11)
assert normal.is_npp(gf11)

assert ppsearch.m_lower_bound(16, 11, ppsearch.q16_counts()) == 5112053760
assert ppsearch.hamming([0, 1, 2], [0, 2, 1]) == 2

try:
    ppsearch.Field(25, prim=[1, 0, 1])
except ValueError:
    pass
else:
    raise AssertionError("reducible polynomial accepted")

print("smoke test ok:", report)

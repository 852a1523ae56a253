"""
Building Farey symbols for Gamma0(N)
====================================

A Farey symbol packages a fundamental polygon for a finite-index subgroup
of PSL2(Z): a cyclic list of cusps, an involution pairing the boundary
arcs, and an order (2 or 3) on each self-paired arc.  The builder only
needs a membership test for the group.
"""

from fareysym import classical, counts, gamma0_symbol

# The classical example: level 15, a genus-1 curve with four cusps.
sym = gamma0_symbol(15)
print("Gamma0(15) polygon vertices:")
print("   ", " ".join(str(v) for v in sym.vertices))
print("pairing of the ten boundary arcs:", sym.pairing)

# Each paired arc carries a group element gluing it to its partner.
for i in range(3):
    print("gluing of arc %d = %s:" % (i, sym.arc(i)), sym.gluing(i).entries())

# The invariants of the quotient curve can be read off the symbol and
# agree with the multiplicative formulas.
print("\n  N  (genus, cusps, nu2, nu3, index)   classical")
for N in (6, 11, 13, 15, 37, 49):
    print("%3d  %-28s %s" % (N, counts(gamma0_symbol(N)),
                             classical.counts_gamma0(N)))

# Levels with elliptic points get self-paired arcs of order 2 or 3.
s13 = gamma0_symbol(13)
print("\nGamma0(13) elliptic arcs:", {i: s13.ell[i] for i in sorted(s13.ell)})
print("their arcs:", [tuple(map(str, s13.arc(i))) for i in sorted(s13.ell)])

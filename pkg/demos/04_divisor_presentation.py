"""
The module of degree-zero divisors on P^1(Q)
============================================

Modular symbols pair cohomology classes against paths between cusps, so
the group of degree-zero divisors on P^1(Q), as a module over the group
ring, is the universal home of such computations.  A Farey symbol hands
over a finite presentation: the boundary arcs generate, one relation ties
the orbit representatives together, and each elliptic arc contributes a
torsion relation whose syzygies repeat forever.
"""

from fareysym import delta0_presentation, gamma0_symbol, resolution_maps

sym = gamma0_symbol(13)
pres = delta0_presentation(sym)
print("generators (arc indices):", pres.generators)
print("elliptic generators:", {i: sym.ell[i] for i in pres.elliptic})

print("\nlambda coefficients of the global relation:")
for a in pres.generators:
    print("   arc %d: %r" % (a, pres.lam[a]))
print("\ntorsion relations:")
for e in pres.elliptic:
    print("   arc %d: mu has %d group-ring terms" % (e, len(pres.mu[e])))

pres.check()
print("\nrelation sanity checks pass (telescoping boundary, gluing "
      "relations, order-3 triangle closure)")

stage1 = resolution_maps(sym, 1)
print("\nstage-1 map: %d rows over %d generators" % (len(stage1), len(stage1[0])))
stage2 = resolution_maps(sym, 2)
stage3 = resolution_maps(sym, 3)
print("stage-2 and stage-3 maps are diagonal over the %d elliptic arcs"
      % len(stage2))
print("their diagonal products vanish in the group ring:",
      all((stage3[i][i] * stage2[i][i]).is_zero() for i in range(len(stage2))))

"""Presentation of the degree-zero divisors on P^1(Q) as a module over the
integral group ring of the symbol's group.

The boundary arcs of the polygon generate the module; one global relation
ties a set of orbit representatives together, and each elliptic arc
contributes a torsion relation.  Eliminating redundant generators leaves a
free presentation whose higher syzygies alternate between multiplication by
(gamma - 1) and by the orbit sum of gamma, one coordinate per elliptic arc.
"""

from .exact import IDENTITY, FareyError


class GroupRingElement:
    """Formal Z-linear combination of PSL2(Z) elements.

    Terms are keyed by sign-normalized matrices; zero coefficients are
    dropped, so an element is zero iff it has no terms.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        merged = {}
        for m, c in (terms or {}).items():
            if c == 0:
                continue
            m = m.psl_normalize()
            c = merged.get(m, 0) + c
            if c:
                merged[m] = c
            else:
                del merged[m]
        self.terms = merged

    @staticmethod
    def zero():
        return GroupRingElement()

    @staticmethod
    def of(mat, coeff=1):
        return GroupRingElement({mat: coeff})

    @staticmethod
    def one():
        return GroupRingElement({IDENTITY: 1})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GroupRingElement(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GroupRingElement({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement({m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1 * m2).psl_normalize()
                out[m] = out.get(m, 0) + c1 * c2
        return GroupRingElement(out)

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "GroupRingElement(0)"
        bits = ["%+d*%s" % (c, list(m.entries())) for m, c in sorted(
            self.terms.items(), key=lambda t: t[0].entries())]
        return "GroupRingElement(%s)" % " ".join(bits)

    def act_on_divisor(self, divisor):
        """Apply the element to a formal sum of cusps (dict cusp -> coeff)."""
        out = {}
        for m, c in self.terms.items():
            for cusp, k in divisor.items():
                img = m.apply(cusp)
                out[img] = out.get(img, 0) + c * k
        return {cusp: k for cusp, k in out.items() if k}

    def to_jsonable(self):
        return [[c, list(m.entries())] for m, c in sorted(
            self.terms.items(), key=lambda t: t[0].entries())]


def arc_divisor(sym, i):
    """The degree-zero divisor {s} - {r} of arc i = (r, s)."""
    r, s = sym.arc(i)
    if r == s:
        raise FareyError("degenerate arc")
    return {s: 1, r: -1} if r != s else {}


class Delta0Presentation:
    """Generators and relations of the degree-zero divisor module.

    generators lists arc indices: first the representatives of the
    non-elliptic pairing orbits (the (infinity, 0) arc first when it is
    among them), then the elliptic arcs.  lam maps every generator to its
    coefficient in the single global relation; mu maps each elliptic
    generator to its torsion relation coefficient.
    """

    __slots__ = ("symbol", "generators", "elliptic", "lam", "mu")

    def __init__(self, symbol, generators, elliptic, lam, mu):
        self.symbol = symbol
        self.generators = generators
        self.elliptic = elliptic
        self.lam = lam
        self.mu = mu

    def check(self):
        """Machine-checkable consistency of the defining relations."""
        sym = self.symbol
        # all boundary arcs sum to zero as a divisor (telescoping).
        total = {}
        for i in range(sym.n):
            for cusp, k in arc_divisor(sym, i).items():
                total[cusp] = total.get(cusp, 0) + k
        assert not any(total.values()), "boundary divisors do not telescope"
        # paired arcs: gamma carries the reversed partner onto the arc.
        for i in range(sym.n):
            j = sym.pairing[i]
            if j == i:
                continue
            g = sym.gluing(i)
            u, v = sym.arc(j)
            r, s = sym.arc(i)
            assert g.apply(v) == r and g.apply(u) == s, \
                "gluing does not carry the reversed partner onto arc %d" % i
        # elliptic relations: gamma^2 = -1 resp. 1 + gamma + gamma^2 = 0,
        # and the order-3 triangle closes up.
        for i, muv in sym.ell.items():
            g = sym.gluing(i)
            if muv == 2:
                sq = g * g
                assert sq.psl_normalize().is_identity_psl(), \
                    "order-2 gluing of arc %d fails gamma^2 = +-1" % i
            else:
                acc = GroupRingElement.one() + GroupRingElement.of(g) \
                    + GroupRingElement.of(g * g)
                total = {}
                for m, c in acc.terms.items():
                    for cusp, k in arc_divisor(self.symbol, i).items():
                        img = m.apply(cusp)
                        total[img] = total.get(img, 0) + c * k
                assert not any(v for v in total.values()), \
                    "order-3 triangle at arc %d does not close" % i
        return True

    def to_jsonable(self):
        return {
            "generators": list(self.generators),
            "elliptic": {str(i): self.symbol.ell[i] for i in self.elliptic},
            "lambda": {str(i): self.lam[i].to_jsonable() for i in self.generators},
            "mu": {str(i): self.mu[i].to_jsonable() for i in self.elliptic},
        }


def delta0_presentation(sym):
    """Presentation of the degree-zero divisors over the group ring.

    The non-elliptic orbit representatives a carry lambda_a = 1 - gamma_a^-1
    and the elliptic arcs carry lambda_a = 1 together with the torsion
    relation mu_a = 1 + gamma_a + ... + gamma_a^(order-1).
    """
    nonell = []
    seen = set()
    inf0 = sym.infinity_zero_arc()
    order = list(range(sym.n))
    if inf0 is not None and sym.pairing[inf0] != inf0:
        order.remove(inf0)
        order.insert(0, inf0)
    for i in order:
        j = sym.pairing[i]
        if i == j or i in seen:
            continue
        seen.add(i)
        seen.add(j)
        nonell.append(i)
    elliptic = sorted(sym.ell)
    lam = {}
    mu = {}
    for i in nonell:
        lam[i] = GroupRingElement.one() - GroupRingElement.of(sym.gluing(i).inverse())
    for i in elliptic:
        lam[i] = GroupRingElement.one()
        g = sym.gluing(i)
        acc = GroupRingElement.one()
        p = IDENTITY
        for _ in range(sym.ell[i] - 1):
            p = p * g
            acc = acc + GroupRingElement.of(p)
        mu[i] = acc
    return Delta0Presentation(sym, nonell + elliptic, elliptic, lam, mu)


def resolution_maps(sym, stage):
    """Matrix (list of rows) of the stage-th map of the free resolution.

    Stage 1 is the relations map: one row for the global lambda relation
    plus one row per elliptic arc carrying its mu in that arc's column.
    From stage 2 on the maps are square and diagonal over the elliptic
    arcs, alternating gamma - 1 (even stages) and mu (odd stages).
    """
    if stage < 1:
        raise FareyError("resolution stages are numbered from 1")
    pres = delta0_presentation(sym)
    ell = pres.elliptic
    if stage == 1:
        cols = {a: k for k, a in enumerate(pres.generators)}
        row0 = [pres.lam[a] for a in pres.generators]
        rows = [row0]
        for e in ell:
            row = [GroupRingElement.zero()] * len(pres.generators)
            row[cols[e]] = pres.mu[e]
            rows.append(row)
        return rows
    rows = []
    for k, e in enumerate(ell):
        row = [GroupRingElement.zero()] * len(ell)
        if stage % 2 == 0:
            row[k] = GroupRingElement.of(sym.gluing(e)) - GroupRingElement.one()
        else:
            row[k] = pres.mu[e]
        rows.append(row)
    return rows

"""Real-root machinery over the nonnegative axis.

Sturm chains give exact root counts in half-open intervals (a, b];
Descartes-style bisection isolates roots into disjoint intervals; a
uniform-sign scan over one sample per cell decides whether some t >= 0
makes every h_i(t) weakly nonnegative or weakly nonpositive.

Internally each polynomial is reduced to its squarefree part, isolated
by repeated interval splitting on integer Taylor shifts, and refined by
sign changes.  Squarefreeness and coprimality are certified modulo a
prime whenever possible; the exact subresultant gcd only runs when the
modular certificate fails, which keeps large random inputs cheap.
"""

from dataclasses import dataclass
from fractions import Fraction

from posring import kernels as _k
from posring.errors import EndpointIsRoot, ZeroInput, ZeroPolynomial
from posring.polyring import IntPoly, RatPoly

_PRIMES = (2**61 - 1, 2**89 - 1)


@dataclass(frozen=True)
class SturmChain:
    """Textbook Sturm sequence: p, p', then negated remainders.

    The last entry is nonzero; the chain stops when the next remainder
    vanishes.  For constant p the chain is the single entry (p,).
    """

    polys: tuple


@dataclass(frozen=True)
class RationalPoint:
    value: Fraction


@dataclass(frozen=True)
class AlgebraicRoot:
    interval: "IsolatingInterval"


@dataclass(frozen=True)
class SignVector:
    """Signs of every h_i at one sample point."""

    sample: object
    signs: tuple

    @property
    def uniform_nonneg(self):
        return -1 not in self.signs

    @property
    def uniform_nonpos(self):
        return 1 not in self.signs

    @property
    def is_uniform(self):
        return self.uniform_nonneg or self.uniform_nonpos


class IsolatingInterval:
    """One distinct real root, boxed in the half-open interval (lo, hi].

    The squarefree part of every owning polynomial has exactly one root
    there.  ``exact`` carries the root value when it is a known
    rational (then hi equals the root).  ``multiplicity_free`` is true
    when the root is simple in every owner.
    """

    __slots__ = ("poly_index", "owners", "lo", "hi", "multiplicity_free", "exact", "_members")

    def __init__(self, poly_index, owners, lo, hi, multiplicity_free, exact, members):
        self.poly_index = poly_index
        self.owners = tuple(owners)
        self.lo = lo
        self.hi = hi
        self.multiplicity_free = multiplicity_free
        self.exact = exact
        self._members = members  # owner index -> squarefree part, for refinement

    def __repr__(self):
        tag = " exact=%s" % self.exact if self.exact is not None else ""
        return "IsolatingInterval(owners=%r, (%s, %s]%s)" % (
            self.owners,
            self.lo,
            self.hi,
            tag,
        )


def _num_den(t):
    t = Fraction(t)
    return t.numerator, t.denominator


def _ev(cs, t):
    # integer with the sign of (poly cs)(t)
    n, d = _num_den(t)
    return _k.eval_scaled(cs, n, d)


def _sgn(v):
    return (v > 0) - (v < 0)


def sturm_chain(p):
    """Textbook Sturm chain of an IntPoly over Q[X].

    Examples: X^2 - 2 gives (X^2 - 2, 2X, 2); X - 1 gives (X - 1, 1);
    X^2 + 1 gives (X^2 + 1, 2X, -1).  Raises ZeroInput on zero.
    """
    if p.is_zero:
        raise ZeroInput("sturm chain of the zero polynomial")
    cur = RatPoly.from_intpoly(p)
    out = [cur]
    if p.degree < 1:
        return SturmChain(tuple(out))
    nxt = RatPoly.from_intpoly(IntPoly._raw(_k.deriv(list(p.coeffs))))
    out.append(nxt)
    while nxt.degree >= 1:
        r = _rat_rem(cur, nxt)
        if r.is_zero:
            break
        r = -r
        out.append(r)
        cur, nxt = nxt, r
    return SturmChain(tuple(out))


def _rat_rem(a, b):
    # remainder of a by b over Q[X]
    ra = list(a.coeffs)
    rb = list(b.coeffs)
    lb = rb[-1]
    while len(ra) >= len(rb):
        c = ra[-1] / lb
        off = len(ra) - len(rb)
        for j in range(len(rb) - 1):
            ra[off + j] -= c * rb[j]
        ra.pop()
        while ra and ra[-1] == 0:
            ra.pop()
    return RatPoly(ra)


def count_roots(chain, a, b):
    """Number of distinct real roots of chain.polys[0] in (a, b).

    Endpoints must not be roots (EndpointIsRoot otherwise) and a < b.
    Works for non-squarefree polynomials: the generalized Sturm
    sequence still counts distinct roots.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a >= b:
        raise ValueError("count_roots needs a < b")
    p = chain.polys[0]
    if p(a) == 0 or p(b) == 0:
        raise EndpointIsRoot("endpoint is a root of the polynomial")
    return _rat_var(chain, a) - _rat_var(chain, b)


def _rat_var(chain, t):
    return _k.sign_variations([p(t) for p in chain.polys])


def cauchy_root_bound(p):
    """1 + max |a_i| / |a_deg| over i < deg; 0 for constants.

    Every real root of p has absolute value strictly below the bound.
    """
    cs = p.coeffs
    if len(cs) < 2:
        return Fraction(0)
    lead = abs(cs[-1])
    m = max(abs(c) for c in cs[:-1])
    return 1 + Fraction(m, lead)


# ---------------------------------------------------------------------------
# isolation internals


class _NewExact(Exception):
    def __init__(self, value):
        self.value = value


def _coprime_mod(a, b):
    # True only with a certificate: a constant gcd modulo some prime
    # that divides neither leading coefficient forces gcd 1 over Q
    for m in _PRIMES:
        g = _k.gcd_mod(a, b, m)
        if g is None:
            continue
        return len(g) == 1
    return False


def _sqfree_data(q):
    """(s, g) for q with q(0) != 0, deg >= 1: s is the squarefree part.

    g is None when squarefreeness was certified modulo a prime (all
    roots simple), else the exact gcd(q, q') for multiplicity checks.
    """
    d = _k.deriv(q)
    if _coprime_mod(q, d):
        return _k.primitive_signed(q), None
    g = _k.gcd(q, d)
    if len(g) == 1:
        return _k.primitive_signed(q), None
    s = _k.exact_div(_k.primitive_signed(q), g)
    assert s is not None
    return s, g


def _var01(q):
    # Descartes bound for the number of roots in the open interval (0, 1)
    if len(q) < 2:
        return 0
    return _k.sign_variations(_k.shift1(q[::-1]))


def _vca_isolate(s):
    """Positive roots of a squarefree s with s(0) != 0, deg >= 1.

    Returns (exacts, intervals) with dyadic interval endpoints: each
    interval holds exactly one root, strictly inside, so the signs of s
    at the two endpoints differ.
    """
    if len(s) == 2:
        r = Fraction(-s[0], s[1])
        return ([r] if r > 0 else []), []
    bound = cauchy_root_bound(IntPoly._raw(s))
    K = 0
    while 2**K < bound:
        K += 1
    # map (0, 2^K) onto (0, 1)
    p0 = _k.strip2([c << (K * i) for i, c in enumerate(s)])
    exacts = []
    ivals = []
    stack = [(0, 0, p0)]
    while stack:
        c, k, q = stack.pop()
        v = _var01(q)
        if v == 0:
            continue
        scale = Fraction(2**K, 2**k)
        if v == 1:
            ivals.append((c * scale, (c + 1) * scale))
            continue
        n = len(q)
        left = _k.strip2([q[i] << (n - 1 - i) for i in range(n)])
        right = _k.shift1(left)
        if right[0] == 0:
            exacts.append((2 * c + 1) * scale / 2)
            right = right[1:]
            assert right[0] != 0
        stack.append((2 * c, k + 1, left))
        stack.append((2 * c + 1, k + 1, right))
    return exacts, ivals


class _PolyData:
    __slots__ = ("cs", "k0", "q", "s", "gfac", "exacts", "ivals")

    def __init__(self, cs):
        self.cs = cs
        k0 = 0
        while cs[k0] == 0:
            k0 += 1
        self.k0 = k0
        self.q = cs[k0:]
        if len(self.q) >= 2:
            self.s, self.gfac = _sqfree_data(self.q)
            self.exacts, self.ivals = _vca_isolate(self.s)
        else:
            self.s, self.gfac = self.q, None
            self.exacts, self.ivals = [], []


class _IvalCluster:
    __slots__ = ("lo", "hi", "members")

    def __init__(self, lo, hi, members):
        self.lo = lo
        self.hi = hi
        self.members = members  # index -> squarefree part

    def rep(self):
        return next(iter(self.members.values()))


def _refine_step(c):
    m = (c.lo + c.hi) / 2
    s = c.rep()
    vm = _ev(s, m)
    if vm == 0:
        raise _NewExact(m)
    if _sgn(vm) != _sgn(_ev(s, c.lo)):
        c.hi = m
    else:
        c.lo = m


def _shrink_to_exclude(s, lo, hi, r):
    # bisect around the interval's root until r is outside
    slo = _sgn(_ev(s, lo))
    while lo < r <= hi:
        m = (lo + hi) / 2
        vm = _ev(s, m)
        if vm == 0:
            raise _NewExact(m)
        if _sgn(vm) != slo:
            hi = m
        else:
            lo = m
    return lo, hi


def _clean_interval(s, lo, hi, known):
    """Move root endpoints of a raw isolating interval inward.

    The raw interval holds exactly one root of s strictly inside, but an
    endpoint may be a different (already recorded) root of s.  Returns
    the cleaned pair, or None when the interior root turns out to be a
    known rational; an unseen rational interior root raises _NewExact.
    """
    vlo = _ev(s, lo)
    if vlo:
        slo = _sgn(vlo)
    else:
        # lo is a simple root of s, so s keeps the sign of s'(lo) just
        # right of it
        slo = _sgn(_ev(_k.deriv(s), lo))
        j = 1
        while True:
            c = lo + (hi - lo) / 2**j
            vc = _ev(s, c)
            if vc == 0:
                if c in known:
                    return None
                raise _NewExact(c)
            if _sgn(vc) == slo:
                lo = c
                break
            j += 1
    if _ev(s, hi) == 0:
        j = 1
        while True:
            c = hi - (hi - lo) / 2**j
            vc = _ev(s, c)
            if vc == 0:
                if c in known:
                    return None
                raise _NewExact(c)
            if _sgn(vc) != slo:
                hi = c
                break
            j += 1
    return lo, hi


def _overlap(a, b):
    return max(a.lo, b.lo) < min(a.hi, b.hi)


def _separate(a, b):
    while _overlap(a, b):
        _refine_step(a)
        _refine_step(b)


def _resolve_overlap(a, b):
    # merge clusters sharing their root, else refine until disjoint
    for _ in range(8):
        _refine_step(a)
        _refine_step(b)
        if not _overlap(a, b):
            return None
    sa = a.rep()
    sb = b.rep()
    if _coprime_mod(sa, sb):
        _separate(a, b)
        return None
    g = _k.gcd(sa, sb)
    if len(g) == 1:
        _separate(a, b)
        return None
    # g divides both squarefree parts, so it has at most one root in the
    # intersection and non-root endpoints; a sign change means the root
    # is shared
    L = max(a.lo, b.lo)
    H = min(a.hi, b.hi)
    if _sgn(_ev(g, L)) != _sgn(_ev(g, H)):
        members = dict(a.members)
        members.update(b.members)
        return _IvalCluster(L, H, members)
    _separate(a, b)
    return None


def _build_clusters(data, known):
    # exact root -> owner list, by direct evaluation
    exact_owned = {}
    for r in sorted(known):
        owners = [i for i, d in enumerate(data) if _ev(d.cs, r) == 0]
        assert owners
        exact_owned[r] = owners

    recs = []
    for i, d in enumerate(data):
        for lo, hi in d.ivals:
            cleaned = _clean_interval(d.s, lo, hi, known)
            if cleaned is None:
                continue
            lo, hi = cleaned
            # drop before shrinking: a shrink bisection must never land
            # on a known root, which only its own drop check rules out
            inside = [r for r in sorted(known) if lo < r <= hi]
            if any(_ev(d.s, r) == 0 for r in inside):
                continue
            for r in inside:
                lo, hi = _shrink_to_exclude(d.s, lo, hi, r)
            recs.append(_IvalCluster(lo, hi, {i: d.s}))

    # resolve overlaps: merge shared roots, separate distinct ones
    while True:
        recs.sort(key=lambda c: c.lo)
        pair = None
        for x in range(len(recs)):
            for y in range(x + 1, len(recs)):
                if _overlap(recs[x], recs[y]):
                    pair = (x, y)
                    break
            if pair:
                break
        if pair is None:
            break
        x, y = pair
        merged = _resolve_overlap(recs[x], recs[y])
        if merged is not None:
            recs = [c for j, c in enumerate(recs) if j not in (x, y)]
            recs.append(merged)
    return exact_owned, recs


def _synthesize(data, exact_owned, recs):
    items = [("exact", r, owners) for r, owners in exact_owned.items()]
    items += [("ival", c.lo, c) for c in recs]
    items.sort(key=lambda it: (it[1], 0 if it[0] == "exact" else 1))

    out = []
    prev_hi = None
    for kind, key, payload in items:
        if kind == "exact":
            r = key
            owners = payload
            if r == 0:
                # left endpoint below any root: no |root| of any owner
                # lies under 1/(1 + max|a_i|/|a_0|) once X is stripped
                lo = -Fraction(1, 2)
                for i in owners:
                    q = data[i].q
                    if len(q) >= 2:
                        c = 1 + Fraction(max(abs(v) for v in q[1:]), abs(q[0]))
                        lo = max(lo, Fraction(-1, 2 * c))
            else:
                lo = max(r - 1, Fraction(0))
                if prev_hi is not None:
                    lo = max(lo, prev_hi)
            mult_free = all(_ev(_k.deriv(data[i].cs), r) != 0 for i in owners)
            out.append(
                IsolatingInterval(min(owners), sorted(owners), lo, r, mult_free, r, {})
            )
            prev_hi = r
        else:
            c = payload
            assert prev_hi is None or c.lo >= prev_hi
            mult_free = True
            for i in sorted(c.members):
                g = data[i].gfac
                if g is None or len(g) == 1:
                    continue
                while _ev(g, c.lo) == 0 or _ev(g, c.hi) == 0:
                    _refine_step(c)
                gch = _k.signed_prs(g)
                if _var_chain(gch, c.lo) - _var_chain(gch, c.hi) >= 1:
                    mult_free = False
                    break
            owners = sorted(c.members)
            out.append(
                IsolatingInterval(
                    owners[0], owners, c.lo, c.hi, mult_free, None, dict(c.members)
                )
            )
            prev_hi = c.hi
    return out


def _var_chain(chain, t):
    n, d = _num_den(t)
    return _k.var_at(chain, n, d)


def isolate_nonneg_roots(hs):
    """Sorted, pairwise-disjoint isolating intervals for every root of
    every h_i in [0, oo).

    A root shared by several polynomials gets one interval listing all
    owners.  Raises ZeroPolynomial when an input is zero.
    """
    for h in hs:
        if h.is_zero:
            raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    data = [_PolyData(list(h.coeffs)) for h in hs]

    known = set()
    for d in data:
        if d.k0:
            known.add(Fraction(0))
        known.update(d.exacts)

    while True:
        try:
            exact_owned, recs = _build_clusters(data, known)
            return _synthesize(data, exact_owned, recs)
        except _NewExact as e:
            known.add(e.value)


def sign_at_root(q, root):
    """Sign of q at the root described by an IsolatingInterval.

    Returns 0 exactly when gcd(squarefree part of the owner, q) has a
    root in the interval; otherwise refines the interval until the sign
    of q is certified constant on it and reads it at the midpoint.
    """
    qcs = list(q.coeffs)
    if not qcs:
        return 0
    return _sign_at_root_impl(qcs, root)


def _sign_at_root_impl(qcs, root):
    if root.exact is not None:
        return _sgn(_ev(qcs, root.exact))
    s = root._members[root.poly_index]
    lo, hi = root.lo, root.hi
    slo = _sgn(_ev(s, lo))

    def narrow(lo, hi):
        m = (lo + hi) / 2
        vm = _ev(s, m)
        if vm == 0:
            return m, m  # landed exactly on the root
        if _sgn(vm) != slo:
            return lo, m
        return m, hi

    if not _coprime_mod(s, qcs):
        g = _k.gcd(s, qcs)
        if len(g) >= 2:
            # g divides s: at most one root in (lo, hi], endpoints first
            # made root-free, then a sign change pins the shared root
            while _ev(g, lo) == 0 or _ev(g, hi) == 0:
                lo, hi = narrow(lo, hi)
                if lo == hi:
                    return _sgn(_ev(qcs, lo))
            if _sgn(_ev(g, lo)) != _sgn(_ev(g, hi)):
                return 0

    # the root is not a root of q: certify a constant sign of q over a
    # small enough interval via a derivative bound
    dq = _k.deriv(qcs)
    dbound = sum(abs(c) * hi ** i for i, c in enumerate(dq))
    while True:
        m = (lo + hi) / 2
        n, d = _num_den(m)
        qm = Fraction(_k.eval_scaled(qcs, n, d), d ** (len(qcs) - 1))
        if abs(qm) > dbound * (hi - lo):
            return _sgn(qm)
        lo, hi = narrow(lo, hi)
        if lo == hi:
            return _sgn(_ev(qcs, lo))


def uniform_sign_exists(hs):
    """First sample t >= 0 where every h_i is weakly nonnegative or
    weakly nonpositive, or None.

    Candidates, scanned left to right: t = 0, every isolated root, a
    rational point between consecutive roots, and B + 1 beyond the
    shared Cauchy bound B.  Raises ZeroPolynomial on a zero entry.
    """
    for h in hs:
        if h.is_zero:
            raise ZeroPolynomial("uniform sign scan needs nonzero polynomials")
    hs_cs = [list(h.coeffs) for h in hs]
    bound = 1 + max(cauchy_root_bound(h) for h in hs)
    roots = isolate_nonneg_roots(hs)

    def at_rational(t):
        return SignVector(RationalPoint(t), tuple(_sgn(_ev(cs, t)) for cs in hs_cs))

    def at_root(root):
        signs = []
        for i, cs in enumerate(hs_cs):
            if i in root.owners:
                signs.append(0)
            else:
                signs.append(_sign_at_root_impl(cs, root))
        return SignVector(
            RationalPoint(root.exact) if root.exact is not None else AlgebraicRoot(root),
            tuple(signs),
        )

    candidates = [at_rational(Fraction(0))]
    for k, root in enumerate(roots):
        candidates.append(at_root(root))
        if k + 1 < len(roots):
            candidates.append(at_rational(_between(root, roots[k + 1])))
    candidates.append(at_rational(bound + 1))

    for vec in candidates:
        if vec.is_uniform:
            return vec
    return None


def _between(a, b):
    # a rational strictly between the roots of consecutive clusters
    if a.exact is not None and b.exact is not None:
        return (a.exact + b.exact) / 2
    if a.hi < b.lo:
        return (a.hi + b.lo) / 2
    if a.exact is None:
        # walk up from a's root toward its hi endpoint
        s = a._members[a.poly_index]
        shi = _sgn(_ev(s, a.hi))
        j = 1
        while True:
            c = a.hi - (a.hi - a.lo) / 2**j
            if _sgn(_ev(s, c)) == shi:
                return c
            j += 1
    s = b._members[b.poly_index]
    slo = _sgn(_ev(s, b.lo))
    j = 1
    while True:
        c = b.lo + (b.hi - b.lo) / 2**j
        if _sgn(_ev(s, c)) == slo:
            return c
        j += 1

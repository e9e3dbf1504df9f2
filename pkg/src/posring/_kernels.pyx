# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels for dense integer polynomial arithmetic.

Same contract as posring._kernels_py: lists of Python ints, ascending
degree, no trailing zeros, zero polynomial is the empty list.
Coefficients stay arbitrary-precision PyObjects; the speedup comes from
typed index loops and lower interpreter overhead.
"""

from math import gcd as _igcd

IMPLEMENTATION = "c"


cpdef list norm(list cs):
    cdef Py_ssize_t n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    del cs[n:]
    return cs


cpdef list add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = a[:]
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return norm(out)


cpdef list sub(list a, list b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    cdef list out = a[:] + [0] * (lb - la if lb > la else 0)
    for i in range(lb):
        out[i] = out[i] - b[i]
    return norm(out)


cpdef list neg(list a):
    return [-x for x in a]


cpdef list scale(list a, k):
    if k == 0:
        return []
    return [x * k for x in a]


cpdef list mul(list a, list b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    cdef object x
    for i in range(la):
        x = a[i]
        if x:
            for j in range(lb):
                out[i + j] = out[i + j] + x * b[j]
    return out


cpdef list mul_xk(list a, Py_ssize_t k):
    if not a:
        return []
    return [0] * k + a


cpdef list deriv(list a):
    cdef Py_ssize_t i
    return [i * a[i] for i in range(1, len(a))]


cpdef exact_div(list a, list b):
    cdef Py_ssize_t i, j, da, db
    if not b:
        return None
    if not a:
        return []
    da = len(a) - 1
    db = len(b) - 1
    if da < db:
        return None
    cdef list r = a[:]
    cdef object lb = b[db], c
    cdef list q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = r[db + i]
        if c:
            if c % lb:
                return None
            c = c // lb
            q[i] = c
            for j in range(db + 1):
                r[i + j] = r[i + j] - c * b[j]
    for i in range(db):
        if r[i]:
            return None
    return q


cpdef content(list a):
    cdef object c = 0
    for x in a:
        c = _igcd(c, x)
        if c == 1:
            break
    return c


cpdef list primitive_signed(list a):
    cdef object c = content(a)
    if c == 0 or c == 1:
        return a[:]
    return [x // c for x in a]


cpdef list primitive_pos(list a):
    if not a:
        return []
    cdef object c = content(a)
    if a[len(a) - 1] < 0:
        c = -c
    if c == 1:
        return a[:]
    return [x // c for x in a]


cpdef list pseudo_rem(list a, list b):
    cdef Py_ssize_t db = len(b) - 1, i, j, off
    cdef object lb = b[db], c, m
    cdef list r = a[:]
    cdef Py_ssize_t e = len(a) - 1 - db + 1
    while r and len(r) - 1 >= db:
        c = r[len(r) - 1]
        del r[len(r) - 1]
        for i in range(len(r)):
            r[i] = r[i] * lb
        off = len(r) - db
        for j in range(db):
            r[off + j] = r[off + j] - c * b[j]
        norm(r)
        e -= 1
    if e > 0 and r:
        m = lb**e
        r = [m * x for x in r]
    return r


cpdef list gcd(list a, list b):
    cdef list A = primitive_pos(a)
    cdef list B = primitive_pos(b)
    cdef list R
    if not A:
        return B
    if not B:
        return A
    if len(A) < len(B):
        A, B = B, A
    while True:
        if len(B) == 1:
            return [1]
        R = pseudo_rem(A, B)
        if not R:
            return primitive_pos(B)
        A, B = B, primitive_pos(R)


cpdef list signed_prs(list p):
    cdef list cur = primitive_signed(p)
    cdef list out = [cur]
    cdef list d = deriv(p)
    cdef list nxt, r, t
    cdef Py_ssize_t e
    if not d:
        return out
    nxt = primitive_signed(d)
    out.append(nxt)
    while len(nxt) > 1:
        r = pseudo_rem(cur, nxt)
        if not r:
            break
        e = len(cur) - len(nxt) + 1
        if nxt[len(nxt) - 1] < 0 and e % 2:
            t = r
        else:
            t = [-x for x in r]
        t = primitive_signed(t)
        out.append(t)
        cur, nxt = nxt, t
    return out


cpdef eval_scaled(list p, num, den):
    cdef Py_ssize_t i, lp = len(p)
    if lp == 0:
        return 0
    cdef object acc = p[lp - 1]
    cdef object dp = 1
    for i in range(lp - 2, -1, -1):
        dp = dp * den
        acc = acc * num + p[i] * dp
    return acc


cpdef int sign_variations(list vals):
    cdef int v = 0, prev = 0, s
    for x in vals:
        if x == 0:
            continue
        s = 1 if x > 0 else -1
        if prev and s != prev:
            v += 1
        prev = s
    return v


cpdef int var_at(list chain, num, den):
    return sign_variations([eval_scaled(e, num, den) for e in chain])


cpdef int var_at_posinf(list chain):
    return sign_variations([e[len(e) - 1] for e in chain if e])


cpdef list shift1(list p):
    # p(X + 1), by synthetic additions
    cdef list r = p[:]
    cdef Py_ssize_t n = len(r)
    cdef Py_ssize_t i, j
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            r[j] = r[j] + r[j + 1]
    return r


cpdef list strip2(list p):
    # divide out the largest common power of two
    cdef long long v = -1
    cdef long long t
    cdef object c
    for c in p:
        if c:
            t = ((c & -c)).bit_length() - 1
            if v < 0 or t < v:
                v = t
            if v == 0:
                return p
    if v <= 0:
        return p
    return [c >> v for c in p]


cpdef gcd_mod(list a, list b, object m):
    # monic gcd of a and b modulo the prime m, or None when either
    # leading coefficient vanishes mod m
    cdef list A = [c % m for c in a]
    cdef list B = [c % m for c in b]
    if not A or not B or A[len(A) - 1] == 0 or B[len(B) - 1] == 0:
        return None
    cdef object inv, c
    cdef Py_ssize_t off, j
    while B:
        inv = pow(B[len(B) - 1], m - 2, m)
        while len(A) >= len(B):
            c = A[len(A) - 1] * inv % m
            if c:
                off = len(A) - len(B)
                for j in range(len(B) - 1):
                    A[off + j] = (A[off + j] - c * B[j]) % m
            A.pop()
            while A and A[len(A) - 1] == 0:
                A.pop()
        A, B = B, A
    inv = pow(A[len(A) - 1], m - 2, m)
    return [c * inv % m for c in A]

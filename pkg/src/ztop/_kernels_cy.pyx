# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ztop._kernels_py.

The integers stay arbitrary-precision Python objects; the win comes from
C-level loop control and call dispatch in the membership and digit scans.
Behaviour must match the pure module exactly (tests/test_kernels_parity.py).
"""


def nearest_int_div(p, q):
    """Nearest integer to p/q with q > 0; exact half-ties resolve toward 0."""
    f, r = divmod(p, q)
    r2 = r << 1
    if r2 > q:
        return f + 1
    if r2 < q or f >= 0:
        return f
    return f + 1


def wrap_half(p, q):
    """The unique t with t = p (mod q) and -q/2 <= t < q/2, for q > 0."""
    t = p % q
    if (t << 1) >= q:
        t -= q
    return t


def decompose_digits(l, list terms):
    """Balanced digits of l over the chain prefix ``terms`` (b_T >= |l|)."""
    cdef Py_ssize_t N, n
    if l == 0:
        return []
    al = -l if l < 0 else l
    N = 0
    while terms[N] < al:
        N += 1
    cdef list digits = [0] * (N + 1)
    r = l
    for n in range(N, 0, -1):
        b = terms[n]
        f, rem = divmod(r, b)
        rem2 = rem << 1
        if rem2 > b or (rem2 == b and f < 0):
            f += 1
        digits[n] = f
        r -= f * b
    digits[0] = r
    while digits and digits[len(digits) - 1] == 0:
        digits.pop()
    return digits


def coefficient_checks(list digits, list terms):
    """(value, digit_bounds_ok, partial_sum_bounds_ok) for digits over terms."""
    cdef Py_ssize_t n, nd = len(digits)
    cdef bint digit_ok = True, partial_ok = True
    value = 0
    for n in range(nd):
        k = digits[n]
        b1 = terms[n + 1]
        ak = -k if k < 0 else k
        if (ak * terms[n]) << 1 > b1:
            digit_ok = False
        value += k * terms[n]
        av = -value if value < 0 else value
        if av << 1 > b1:
            partial_ok = False
    return value, digit_ok, partial_ok


def member_direct_scan(k, list terms, m):
    """Uniform membership scan below the termination bound 4m|k|."""
    cdef Py_ssize_t n, nt = len(terms)
    if k == 0:
        return True
    ak = -k if k < 0 else k
    bound = 4 * m * ak
    fourm = 4 * m
    for n in range(1, nt):
        b = terms[n]
        if b >= bound:
            return True
        t = k % b
        if (t << 1) >= b:
            t -= b
        if t < 0:
            t = -t
        if fourm * t > b:
            return False
    raise ValueError("pivot prefix too short for membership scan")


def member_partial_scan(k, list terms, m):
    """Partial-sum membership scan on the balanced digits of k."""
    cdef Py_ssize_t n, nd
    if k == 0:
        return True
    cdef list digits = decompose_digits(k, terms)
    nd = len(digits)
    ak = -k if k < 0 else k
    bound = 4 * m * ak
    fourm = 4 * m
    partial = 0
    n = 1
    while True:
        if n - 1 < nd:
            partial += digits[n - 1] * terms[n - 1]
        b = terms[n]
        ap = -partial if partial < 0 else partial
        if fourm * ap > b:
            return False
        if b >= bound and n >= nd:
            return True
        n += 1

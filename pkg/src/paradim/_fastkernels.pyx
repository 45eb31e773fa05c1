# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the _kernels_py functions.

All arguments in the ranges this package uses fit comfortably in 64 bits
(|D| < 10^6, f < 10^5), so plain C integers are safe here.
"""
from libc.math cimport sqrt


cdef long long c_gcd(long long a, long long b) noexcept:
    while b:
        a, b = b, a % b
    return a if a >= 0 else -a


cdef int c_kronecker(long long a, long long n) noexcept:
    cdef int sign = 1
    cdef int t = 0
    cdef long long tmp
    if n == 0:
        return 1 if (a == 1 or a == -1) else 0
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 and (a % 8 == 3 or a % 8 == 5 or a % 8 == -3 or a % 8 == -5):
            sign = -sign
    a %= n
    if a < 0:
        a += n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 == 3 or n % 8 == 5:
                sign = -sign
        tmp = a
        a = n
        n = tmp
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def kronecker(a, n):
    return c_kronecker(a, n)


def class_number_from_disc(D):
    cdef long long d = D
    cdef long long h = 0
    cdef long long a, b, c, num, four_a
    cdef long long amax = <long long>sqrt((-d) / 3.0) + 1
    while amax * amax > -d // 3:
        amax -= 1
    for a in range(1, amax + 1):
        four_a = 4 * a
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % four_a:
                continue
            c = num // four_a
            if c < a:
                continue
            if b < 0 and a == c:
                continue
            if c_gcd(c_gcd(a, b if b >= 0 else -b), c) == 1:
                h += 1
    return h


def b2_character_sum(D0, f):
    cdef long long d0 = D0
    cdef long long n = f
    cdef long long a
    cdef long long total = 0
    for a in range(1, n + 1):
        total += c_kronecker(d0, a) * a * a
    return total

"""Pure-Python kernels: Kronecker symbol, reduced-form class-number count,
and the quadratic character sum behind generalized Bernoulli numbers.

A compiled twin lives in _fastkernels.pyx; both expose the same three
functions and must stay in lock-step.
"""
from math import gcd, isqrt


def kronecker(a, n):
    """Kronecker symbol (a/n) for any integers a, n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # strip factors of 2 from n
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # Jacobi symbol on the odd part by quadratic reciprocity
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def class_number_from_disc(D):
    """Class number of the imaginary quadratic order of discriminant D < 0,
    by counting reduced primitive forms (A, B, C), B^2 - 4AC = D:
    -A < B <= A <= C, with B >= 0 when A = C."""
    h = 0
    amax = isqrt(-D // 3)
    for a in range(1, amax + 1):
        four_a = 4 * a
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % four_a:
                continue
            c = num // four_a
            if c < a:
                continue
            if b < 0 and a == c:
                continue
            if gcd(gcd(a, abs(b)), c) == 1:
                h += 1
    return h


def b2_character_sum(D0, f):
    """sum_{a=1}^{f} (D0/a) * a^2 for the Kronecker character mod f."""
    return sum(kronecker(D0, a) * a * a for a in range(1, f + 1))

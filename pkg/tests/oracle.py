"""Independent brute-force oracle, deliberately sharing no code with the package.

Roots are generated by a reflection-orbit walk instead of string closure, the
distinguished-subset test recounts weights from scratch, and the q-eigenspace
verdict reimplements the value arithmetic on raw (r, theta) pairs.
"""

from fractions import Fraction
from itertools import combinations

CARTAN = {
    "A": lambda n: _chain(n),
    "B": lambda n: _tail(n, -1, -2),
    "C": lambda n: _tail(n, -2, -1),
    "D": lambda n: _fork(n),
    "G": lambda n: [[2, -3], [-1, 2]],
    "F": lambda n: [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]],
    "E": lambda n: _e_chain(n),
}


def _chain(n):
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def _tail(n, upper, lower):
    a = _chain(n)
    if n >= 2:
        a[n - 2][n - 1], a[n - 1][n - 2] = upper, lower
    return a


def _fork(n):
    a = _chain(n - 1) if n > 1 else [[2]]
    for row in a:
        row.append(0)
    a.append([0] * n)
    a[n - 1][n - 1] = 2
    if n >= 3:
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
    return a


def _e_chain(n):
    a = _chain(n - 1)
    for row in a:
        row.append(0)
    a.append([0] * n)
    a[n - 1][n - 1] = 2
    a[n - 4][n - 1] = a[n - 1][n - 4] = -1
    return a


def cartan_of(label):
    return CARTAN[label[0]](int(label[1:]))


def reflection_roots(label):
    """All roots by closing the base under every simple reflection."""
    a = cartan_of(label)
    n = len(a)
    base = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(base) | {tuple(-c for c in b) for b in base}
    changed = True
    while changed:
        changed = False
        for beta in list(roots):
            for i in range(n):
                pairing = sum(a[i][k] * beta[k] for k in range(n))
                image = tuple(
                    c - pairing * (1 if j == i else 0) for j, c in enumerate(beta)
                )
                if image not in roots:
                    roots.add(image)
                    changed = True
    return roots


def distinguished_subsets(label):
    """Weight-2 node subsets passing the naive counting identity."""
    roots = reflection_roots(label)
    n = len(cartan_of(label))
    found = []
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            two = zero = 0
            for beta in roots:
                w = 2 * sum(beta[j] for j in subset)
                if w == 2:
                    two += 1
                elif w == 0:
                    zero += 1
            if two == n + zero:
                found.append(subset)
    return found


def q_distinguished(label, rs, thetas):
    """Naive verdict: count roots with value q versus value 1."""
    roots = reflection_roots(label)
    n = len(cartan_of(label))
    dim_q = dim_one = 0
    for beta in roots:
        r = sum(Fraction(c) * Fraction(x) for c, x in zip(beta, rs))
        t = sum(Fraction(c) * Fraction(x) for c, x in zip(beta, thetas)) % 1
        if r == 1 and t == 0:
            dim_q += 1
        elif r == 0 and t == 0:
            dim_one += 1
    return dim_q >= dim_one + n

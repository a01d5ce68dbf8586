"""Small exact matrix helpers over any field; matrices are tuples of row tuples."""

from itertools import permutations


def transpose(m):
    return tuple(zip(*m))


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), 0 * row[0]) for col in bt) for row in a)


def vecmat(v, m):
    """Row vector times matrix."""
    return tuple(sum((v[k] * m[k][j] for k in range(len(v))), 0 * v[0]) for j in range(len(m[0])))


def det3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adjugate3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def inverse3(m):
    """Exact inverse via adjugate over determinant; caller ensures det != 0."""
    d = det3(m)
    return tuple(tuple(x / d for x in row) for row in adjugate3(m))


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_leibniz(m):
    """Determinant by the permutation expansion; meant for n <= 4."""
    n = len(m)
    total = 0 * m[0][0]
    for perm in permutations(range(n)):
        term = m[0][perm[0]]
        for r in range(1, n):
            term = term * m[r][perm[r]]
        total = total + _perm_sign(perm) * term
    return total


def identity(n, one):
    zero = one - one
    return tuple(tuple(one if r == c else zero for c in range(n)) for r in range(n))

"""Exact Gaussian elimination over a field descriptor."""


def solve_linear(field, rows, target):
    """One solution of rows * z = target, or None if inconsistent.

    Free variables are set to zero.  ``rows`` is a list of equal-length
    scalar lists; scalars follow the field descriptor's representation.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(r) + [t] for r, t in zip(rows, target)]
    pivots = []
    row = 0
    for col in range(n):
        pivot = None
        for r in range(row, m):
            if not field.is_zero(a[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = field.inv(a[row][col])
        a[row] = [field.mul(v, inv) for v in a[row]]
        for r in range(m):
            if r != row and not field.is_zero(a[r][col]):
                factor = a[r][col]
                a[r] = [
                    field.sub(v, field.mul(factor, w)) for v, w in zip(a[r], a[row])
                ]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if not field.is_zero(a[r][n]):
            return None
    solution = [field.zero] * n
    for r, col in enumerate(pivots):
        solution[col] = a[r][n]
    return solution

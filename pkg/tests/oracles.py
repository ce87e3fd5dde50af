"""Independent test-side oracles.

These deliberately avoid the library's matrix pipeline: identities are summed
out index by index over the raw structure-constant tensors, and linear solves
go through sympy.  They exist so that every checked value has a second,
unrelated route to it.
"""

from fractions import Fraction

import sympy


def antipode_law_holds(a) -> bool:
    """h_(1)·S(h_(2)) = eps(h)·1  and  S(h_(1))·h_(2) = eps(h)·1 at every
    basis element, straight off the tensors."""
    for x in a.objects:
        for y in a.objects:
            d = a.dim(x, y)
            dc = a.comult[(x, y)]
            s = a.antipode[(x, y)]
            for h in range(d):
                left = [a.field.zero] * a.dim(x, x)
                right = [a.field.zero] * a.dim(y, y)
                for j in range(d):
                    for k in range(d):
                        if not dc[h][j][k]:
                            continue
                        for t in range(a.dim(y, x)):
                            if s[t][k]:
                                for m in range(a.dim(x, x)):
                                    left[m] = left[m] + dc[h][j][k] * s[t][k] \
                                        * a.mult[(x, y, x)][j][t][m]
                        for t in range(a.dim(y, x)):
                            if s[t][j]:
                                for m in range(a.dim(y, y)):
                                    right[m] = right[m] + dc[h][j][k] \
                                        * s[t][j] * a.mult[(y, x, y)][t][k][m]
                eps_h = a.counit[(x, y)][h]
                if left != [eps_h * u for u in a.unit[x]]:
                    return False
                if right != [eps_h * u for u in a.unit[y]]:
                    return False
    return True


def sympy_integral_basis(a, x):
    """Solve phi·f_i = <f_i,1>·phi over the whole dual basis of the diagonal
    component at x, using sympy's nullspace; echelon-normalized."""
    d = a.dim(x, x)
    dc = a.comult[(x, x)]
    u = a.unit[x]
    rows = []
    for i in range(d):
        for c in range(d):
            rows.append([sympy.Rational(dc[c][i][al])
                         - (sympy.Rational(u[i]) if al == c else 0)
                         for al in range(d)])
    ns = sympy.Matrix(rows).nullspace()
    if not ns:
        return []
    coords = sympy.Matrix.hstack(*ns).T.rref()[0]
    basis = []
    for r in range(coords.rows):
        row = [Fraction(int(v.p), int(v.q)) for v in coords.row(r)]
        if any(row):
            basis.append(tuple(row))
    return basis

"""Independent reference values for the unit tests (sympy / mpmath, brute force)."""
import itertools
from fractions import Fraction

import mpmath as mp
import sympy as sp

mp.mp.dps = 40


def brute_minima(basis, box=4):
    pts = []
    for c in itertools.product(range(-box, box + 1), repeat=basis.cols):
        if any(c):
            v = basis * sp.Matrix(c)
            pts.append((sp.nsimplify(sp.simplify(v.dot(v))), c))
    pts.sort(key=lambda p: float(p[0]))
    chosen, out = [], []
    for n2, c in pts:
        m = sp.Matrix.hstack(*[sp.Matrix(x) for x in chosen + [c]])
        if m.rank() == len(chosen) + 1:
            chosen.append(c)
            out.append(n2)
        if len(chosen) == basis.cols:
            break
    return out


def v_star(lam, mu):
    f = lambda v: mu * (mp.sqrt(1 - v**2) - v) - lam * v * (v**2 + mp.sqrt(1 - v**2)) / mp.sqrt(1 - v**4)
    v = mp.findroot(f, (mp.mpf("1e-30"), 1 / mp.sqrt(2)), solver="bisect")
    r = lam * (v**2 + mp.sqrt(1 - v**2)) / mp.sqrt(1 - v**4)
    return v, r, r + 2 * mu


def main():
    s3 = sp.sqrt(3)
    lp = sp.Matrix([[1, sp.Rational(1, 2)], [0, s3]])
    print("L' minima^2", brute_minima(lp))
    g = lp.T * lp
    print("L' deep hole coords", g.solve(sp.Matrix([g[0, 0] / 2, g[1, 1] / 2])).T)
    hexb = sp.Matrix([[1, sp.Rational(1, 2)], [0, s3 / 2]])
    print("hex det^2", (hexb.T * hexb).det())
    v = sp.Matrix([1, 2])
    print("proj (1,2)", v * v.T / v.dot(v))
    for lam, mu in [(1, 1 / mp.sqrt(2)), (1, 1 / mp.sqrt(3)), (1, 1), (1, 10), (1, 100), (1, mp.mpf(3) / 2)]:
        print("v* lam=%s mu=%s" % (lam, mp.nstr(mu, 10)), [mp.nstr(x, 17) for x in v_star(lam, mu)])
    # short extension of (2,4): g = 2, det^2 = 20, mu^2 = 20/4
    print("bound^2 (2,4)", Fraction(4, 20) + Fraction(20, 4))
    # mu(Lambda(alpha)) for a few alpha
    for a in [Fraction(1, 100), Fraction(1, 4), Fraction(1, 2), Fraction(99, 100)]:
        l1, l2 = a, 1 - a
        print("mu^2 Lambda(%s)" % a, l1 * l2 * (l1 + l2) / (4 * l1 * l2))
    # Siegel: 12 sqrt(3) * 13^2
    print("siegel 2L'", 12 * mp.sqrt(3) * 169)
    print("mu theta pi/3", mp.sqrt(1 - mp.cos(mp.pi / 3)) / (mp.sqrt(2) * mp.sin(mp.pi / 3)))
    print("cos theta 1/sqrt(13)", mp.degrees(mp.acos(1 / mp.sqrt(13))))


if __name__ == "__main__":
    main()

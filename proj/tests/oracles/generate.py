"""Reference values for the unit tests, computed with mpmath at 40 digits.

Run: python3 tests/oracles/generate.py
The printed values are frozen into the C++ tests; nothing here is needed at
build time.
"""
from mpmath import mp, mpf, legendre, jacobi, quad, gamma, loggamma, hyp2f1, \
    ellipe, sqrt, pi, cos, sin, log, exp, findroot, fabs, e, inf
from scipy.special import roots_jacobi

mp.dps = 40


def show(name, v):
    print(f"{name} = {mp.nstr(v, 20)}")


def leg_coeff(f, k, breaks=()):
    pts = [-1, *breaks, 1]
    return (k + mpf(1) / 2) * quad(lambda x: f(x) * legendre(k, x), pts)


def gauss_nodes(n):
    guesses = [cos(pi * (i - mpf(1) / 4) / (n + mpf(1) / 2)) for i in range(1, n + 1)]
    xs = [findroot(lambda x: legendre(n, x), g) for g in guesses]
    ws = []
    for x in xs:
        dp = n * (x * legendre(n, x) - legendre(n - 1, x)) / (x * x - 1)
        ws.append(2 / ((1 - x * x) * dp * dp))
    return xs, ws


print("# Gauss-Legendre, 5 points")
xs, ws = gauss_nodes(5)
for x, w in zip(xs, ws):
    print(f"  node {mp.nstr(x, 20)} weight {mp.nstr(w, 20)}")

print("# polynomial values")
show("P_50(0.3)", legendre(50, mpf("0.3")))
show("P_7^(1.5,-0.5)(0.3)", jacobi(7, mpf("1.5"), mpf("-0.5"), mpf("0.3")))
show("P_10^(1,0)(-0.4)", jacobi(10, 1, 0, mpf("-0.4")))
show("D_30(0.3,-0.7)", sum((k + mpf(1) / 2) * legendre(k, mpf("0.3")) * legendre(k, mpf("-0.7")) for k in range(31)))
show("D_40(0.2,0.2+1e-9)", sum((k + mpf(1) / 2) * legendre(k, mpf("0.2")) * legendre(k, mpf("0.2") + mpf("1e-9")) for k in range(41)))

print("# special functions")
show("lgamma(0.5)", loggamma(mpf("0.5")))
show("lgamma(123.25)", loggamma(mpf("123.25")))
show("Gamma(10.5)/Gamma(10)", gamma(mpf("10.5")) / gamma(10))
show("2F1(1.5,0.5;2.5;0.3)", hyp2f1(mpf("1.5"), mpf("0.5"), mpf("2.5"), mpf("0.3")))
show("E(k=0.6)", ellipe(mpf("0.36")))
rho = mpf(2)
a, b = (rho + 1 / rho) / 2, (rho - 1 / rho) / 2
show("L(rho=2)", quad(lambda t: sqrt(a * a * sin(t) ** 2 + b * b * cos(t) ** 2), [0, 2 * pi]))

print("# Legendre coefficients")
for k in (0, 5, 20, 50):
    show(f"a_{k}[1/(x-2)]", leg_coeff(lambda x: 1 / (x - 2), k))
for k in (0, 7, 30):
    show(f"a_{k}[|x-1/2|^(5/2)]", leg_coeff(lambda x: fabs(x - mpf(1) / 2) ** mpf("2.5"), k, (mpf(1) / 2,)))
for alpha in ("1.5", "2.5"):
    for k in (0, 1, 2, 3, 10, 30):
        show(f"a_{k}[(1+x)^{alpha}]", leg_coeff(lambda x: (1 + x) ** mpf(alpha), k))
        show(f"a_{k}[(1-x)^{alpha}]", leg_coeff(lambda x: (1 - x) ** mpf(alpha), k))
for k in (0, 1, 4, 9):
    show(f"a_{k}[exp(x)]", leg_coeff(exp, k))
for k in (2, 10):
    show(f"c_{k}[|x|]", 2 / pi * quad(lambda t: fabs(cos(t)) * cos(k * t), [0, pi / 2, pi]))
show("c_3[exp(x)]", 2 / pi * quad(lambda t: exp(cos(t)) * cos(3 * t), [0, pi]))

print("# Lebesgue constants")


def lebesgue(n):
    f = lambda x: jacobi(n, 1, 0, x)
    guesses = roots_jacobi(n, 1, 0)[0]
    roots = sorted(findroot(f, mpf(float(g))) for g in guesses)
    assert all(roots[i + 1] - roots[i] > mpf("1e-10") for i in range(n - 1))
    pts = [-1, *roots, 1]
    return (n + 1) / mpf(2) * sum(fabs(quad(f, [pts[i], pts[i + 1]])) for i in range(len(pts) - 1))


for n in (1, 2, 5, 10, 50):
    show(f"Lambda_{n}", lebesgue(n))

print("# best approximation of exp(x), degree 1")
m = (e - 1 / e) / 2
xs_ = log(m)
# e^-1 - (c - m) = E, e^x* - (c + m x*) = -E
c = (exp(-1) + m + exp(xs_) - m * xs_) / 2
show("E_1[exp]", exp(-1) - (c - m))

print("# Peano kernel")


def peano(m_, n, x, t):
    r = m_ - 1
    def ak(k):
        return (k + mpf(1) / 2) * quad(lambda y: (y - t) ** r * legendre(k, y), [t, 1])
    proj = sum(ak(k) * legendre(k, x) for k in range(n + 1))
    tp = (x - t) ** r if x > t else 0
    return (tp - proj) / gamma(m_)


show("K_2(n=10; x=0.3, t=-0.2)", peano(2, 10, mpf("0.3"), mpf("-0.2")))
show("K_3(n=12; x=-0.5, t=0.4)", peano(3, 12, mpf("-0.5"), mpf("0.4")))

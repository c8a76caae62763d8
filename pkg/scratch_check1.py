"""Dev scratch: validate specfun, roots, quadrature, triangle against oracles."""
import math
import numpy as np

from stickdist.specfun import ellip_k, ellip_e, ellip_pi, ellip_k_c
from stickdist.roots import triangle_cubic_roots, quad_cubic_roots, find_root_bracketed
from stickdist.quadrature import integrate_adaptive, integrate_endpoint_singular
from stickdist import triangle


def agm_k(m):
    a, b = 1.0, math.sqrt(1.0 - m)
    for _ in range(64):
        if a == b:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        if abs(a - b) <= 2e-16 * a:
            a = 0.5 * (a + b)
            break
    return math.pi / (2.0 * a)


def simpson(f, a, b, n=1 << 14):
    xs = np.linspace(a, b, 2 * n + 1)
    ys = np.array([f(x) for x in xs])
    h = (b - a) / (2 * n)
    return h / 3 * (ys[0] + ys[-1] + 4 * ys[1:-1:2].sum() + 2 * ys[2:-1:2].sum())


print("== specfun ==")
for m in [1e-6, 0.1, 0.25, 0.5, 0.9, 0.99, 0.999999]:
    ko = agm_k(m)
    print(f"K({m}): rel err vs AGM = {abs(ellip_k(m)-ko)/ko:.3e}")
for m in [0.25, 0.5, 0.99]:
    eo = simpson(lambda t, m=m: math.sqrt(1 - m * math.sin(t) ** 2), 0, math.pi / 2)
    print(f"E({m}): rel err vs Simpson = {abs(ellip_e(m)-eo)/eo:.3e}")
for (n, m) in [(0.4, 0.6), (-0.5, 0.3), (0.9, 0.1), (0.99, 0.95)]:
    po = simpson(lambda t, n=n, m=m: 1.0 / ((1 - n * math.sin(t) ** 2) * math.sqrt(1 - m * math.sin(t) ** 2)), 0, math.pi / 2, n=1 << 16)
    print(f"Pi({n},{m}): rel err vs Simpson = {abs(ellip_pi(n,m)-po)/po:.3e}")
# Legendre relation
rng = np.random.default_rng(1)
worst = 0.0
for m in rng.uniform(0.01, 0.99, 100):
    lhs = ellip_e(m) * ellip_k(1 - m) + ellip_e(1 - m) * ellip_k(m) - ellip_k(m) * ellip_k(1 - m)
    worst = max(worst, abs(lhs - math.pi / 2))
print(f"Legendre worst abs dev: {worst:.3e}")

print("== roots ==")
r = triangle_cubic_roots(1.0 / 27.0)
print(f"z=1/27: c={r.c} a={r.a} b={r.b}")
r = triangle_cubic_roots(0.03)
print(f"z=0.03: c={r.c!r} a={r.a!r} b={r.b!r}")
print(f"  Vieta: sum-1={r.a+r.b+r.c-1:.2e} pair={r.a*r.b+r.b*r.c+r.c*r.a:.2e} prod+4z={r.a*r.b*r.c+4*0.03:.2e}")
# bisection oracle for z=0.03
def poly(w, z=0.03):
    return (w - 1.0) * w * w + 4.0 * z
def bisect(lo, hi):
    flo = poly(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = poly(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)
print(f"  oracle c={bisect(-1, 0)!r} a={bisect(0, 2/3)!r} b={bisect(2/3, 1)!r}")
# near double root
for e in [1e-10, 1e-12, 1e-14, 0.0]:
    z = 1/27 - e
    r = triangle_cubic_roots(z)
    res_a = abs(poly(r.a, z)); res_b = abs(poly(r.b, z))
    print(f"z=1/27-{e:.0e}: a={r.a:.12f} b={r.b:.12f} |P(a)|={res_a:.2e} |P(b)|={res_b:.2e}")
# quad cubic
q = quad_cubic_roots(0.03, 0.6)
print(f"quad (0.03,0.6): a={q.a!r} (expect <0)")
q = quad_cubic_roots(0.03, 0.2)
print(f"quad (0.03,0.2): a={q.a!r} (expect >0)")
q = quad_cubic_roots(0.01, 0.5)
P = lambda r3: (1 - 0.5) * (1 - r3) * (0.5 + r3) ** 2 - 4 * 0.01
print(f"quad (0.01,0.5): residuals {abs(P(q.c)):.2e} {abs(P(q.a)):.2e} {abs(P(q.b)):.2e}; c<a<b<1: {q.c<q.a<q.b<1}")

print("== brent ==")
print(f"sqrt2 err: {abs(find_root_bracketed(lambda x: x*x-2, 1, 2, 1e-15) - math.sqrt(2)):.2e}")
print(f"pi/2 err : {abs(find_root_bracketed(math.cos, 1, 2, 1e-15) - math.pi/2):.2e}")

print("== quadrature ==")
res = integrate_adaptive(lambda x: x * x, 0, 1, 1e-12)
print(f"x^2: err={abs(res.value-1/3):.2e} evals={res.evaluations} conv={res.converged}")
res = integrate_adaptive(math.sin, 0, math.pi, 1e-12)
print(f"sin: err={abs(res.value-2):.2e}")
res = integrate_endpoint_singular(lambda u: 1.0 / math.sqrt(u * (1 - u)), 0, 1, 1e-13)
print(f"arcsine: err={abs(res.value-math.pi):.2e} evals={res.evaluations}")
res = integrate_endpoint_singular(lambda u: math.log(u) / math.sqrt(u), 0, 1, 1e-13)
print(f"log/sqrt: err={abs(res.value+4):.2e}")
# vectorized + distances
res = integrate_endpoint_singular(lambda x, dlo, dhi: 1.0 / np.sqrt(dlo * dhi), 0, 1, 1e-13,
                                  vectorized=True, pass_distances=True)
print(f"arcsine vec+dist: err={abs(res.value-math.pi):.2e}")

print("== triangle identities ==")
# mean-area double integral via iterated quadrature (spec example for adaptive)
def inner(x):
    r = integrate_endpoint_singular(
        lambda y: 2.0 * math.sqrt(max((1 - x) * (1 - y) * (x + y - 1), 0.0)), 1 - x, 1, 1e-12)
    return r.value
res = integrate_adaptive(inner, 0, 1, 1e-9)
print(f"mean-area 2D: err={abs(res.value - 4*math.pi/105):.2e}")

# g(z) closed form vs direct singular quadrature
for z in [0.02, 0.005, 1/27 - 1e-4, 0.125**2]:
    r = triangle_cubic_roots(z)
    def integrand(w, z=z):
        return 4.0 / math.sqrt(max((1 - w) * ((1 - w) * w * w - 4 * z), 1e-320))
    direct = integrate_endpoint_singular(integrand, r.a, r.b, 1e-11)
    g = triangle.density_of_area_squared(z)
    print(f"g({z:.5f}): closed={g:.12f} direct={direct.value:.12f} diff={abs(g-direct.value):.2e} conv={direct.converged}")

# survival closed form vs student integral
for zeta in [0.05, 0.1, 0.15, 0.19, 0.01, 0.1258338431386510592]:
    z = zeta * zeta
    r = triangle_cubic_roots(z)
    alpha = math.sqrt(1 - r.b); beta = math.sqrt(1 - r.a)
    def stud(t, z=z):
        return math.sqrt(max((1 - t * t) ** 2 * t * t - 4 * z, 0.0))
    direct = integrate_endpoint_singular(stud, alpha, beta, 1e-13)
    sv = triangle.survival(zeta)
    print(f"surv({zeta}): closed={sv:.15f} 4J={4*direct.value:.15f} diff={abs(sv-4*direct.value):.2e}")

print("== median ==")
mu = triangle.median(1e-15)
print(f"median = {mu!r}  (paper 0.1258338431386510592028005)")
print(f"median L=1 = {triangle.median(1e-15, stick_length=1.0)!r} (paper 0.0314584607846627648007001)")
print(f"survival(median) - 0.5 = {triangle.survival(mu)-0.5:.2e}")

print("== moments ==")
m1 = triangle.moment(1); m2 = triangle.moment(2)
print(f"moment1 err = {abs(m1 - 4*math.pi/105):.2e}")
print(f"moment2 err = {abs(m2 - 1/60):.2e}")
res = integrate_endpoint_singular(lambda t: triangle.pdf(t), 0, triangle.ZETA_MAX, 1e-11)
print(f"normalization err = {abs(res.value-1):.2e}")

print("== pdf endpoint ==")
for zeta in [triangle.ZETA_MAX - 1e-6, triangle.ZETA_MAX - 1e-10]:
    print(f"pdf({zeta!r}) = {triangle.pdf(zeta)} (limit {triangle.PDF_AT_MAX})")

print("== sampling ==")
stats = triangle.sample(seed=42, count=1_000_000, workers=4)
print(f"acceptance = {stats.acceptance_ratio:.5f} (1/4), se={stats.acceptance_se:.2e}")
print(f"mean area  = {stats.mean:.6f} vs {4*math.pi/105:.6f}, se={stats.mean_se:.2e}")
stats2 = triangle.sample(seed=42, count=1_000_000, workers=4)
print(f"determinism: {stats.mean == stats2.mean and np.array_equal(stats.hist_counts, stats2.hist_counts)}")

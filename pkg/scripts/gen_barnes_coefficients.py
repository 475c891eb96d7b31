#!/usr/bin/env python3
"""Regenerate the frozen degree-n polynomial coefficients of log G_n(1+z).

Runs at 50-digit precision with mpmath: evaluates the regularized canonical
product A_n with Hurwitz-zeta tail acceleration, anchors the polynomial at the
exactly-known integer values log G_n(m) (factorial cascades), solves the
Vandermonde system, and prints 36-digit coefficient literals together with
extra-anchor validation errors.

The printed values for n = 4..6 are what src/multigamma/multigamma.py freezes;
n = 1..3 must reproduce the classical closed forms (Euler gamma, Barnes,
and the degree-3 constants D, E, F).
"""
import mpmath as mp

mp.mp.dps = 50


def binom_row(n, kmax):
    out = [mp.mpf(1)]
    b = mp.mpf(1)
    for k in range(1, kmax):
        b = b * (n + k - 1) / k
        out.append(b)
    return out


def beta_coeffs(n):
    poly = [mp.mpf(1)]
    for i in range(n - 1):
        new = [mp.mpf(0)] * (len(poly) + 1)
        for d, c in enumerate(poly):
            new[d] += c * i
            new[d + 1] += c
        poly = new
    fact = mp.factorial(n - 1)
    return [c / fact for c in poly]


def a_series(z, n, j_extra=90):
    z = mp.mpf(z)
    k0 = max(64, int(4 * abs(z)) + 8)
    b = binom_row(n, k0)
    total = mp.mpf(0)
    for k in range(1, k0 + 1):
        u = z / k
        t_poly = mp.mpf(0)
        up = mp.mpf(1)
        for j in range(1, n + 1):
            up *= u
            t_poly += (-1) ** (j - 1) * up / j
        total += b[k - 1] * (t_poly - mp.log(1 + u))
    betas = beta_coeffs(n)
    tail = mp.mpf(0)
    zp = z**n
    for j in range(n + 1, n + j_extra + 1):
        zp *= z
        s = mp.fsum(bi * mp.zeta(j - i, k0 + 1) for i, bi in enumerate(betas))
        tail += (-1) ** j * zp / j * s
    return (-1) ** (n - 1) * (total + tail)


def log_gn_int(n, m):
    tbl = {(1, mm): mp.loggamma(mm) for mm in range(1, m + 1)}
    for nn in range(2, n + 1):
        tbl[(nn, 1)] = mp.mpf(0)
        for mm in range(1, m):
            tbl[(nn, mm + 1)] = tbl[(nn, mm)] + tbl[(nn - 1, mm)]
    return tbl[(n, m)]


def fit(n):
    mat = mp.matrix(n + 1, n + 1)
    rhs = mp.matrix(n + 1, 1)
    for r in range(n + 1):
        for c in range(n + 1):
            mat[r, c] = mp.mpf(r) ** c
        rhs[r] = log_gn_int(n, r + 1) - a_series(r, n)
    sol = mp.lu_solve(mat, rhs)
    return [sol[i] for i in range(n + 1)]


def main():
    gamma = mp.euler
    log2pi = mp.log(2 * mp.pi)
    log_a = mp.mpf(1) / 12 - mp.zeta(-1, derivative=1)
    closed = {
        1: [mp.mpf(0), -gamma],
        2: [mp.mpf(0), (log2pi - 1) / 2, -(1 + gamma) / 2],
        3: [
            mp.mpf(0),
            mp.mpf(3) / 8 - log2pi / 4 - log_a,
            (gamma + log2pi + mp.mpf(1) / 2) / 4,
            -(gamma + mp.pi**2 / 6 + mp.mpf(3) / 2) / 6,
        ],
    }
    for n in range(1, 7):
        q = fit(n)
        print(f"n = {n}:")
        for c in q:
            print(f"    {mp.nstr(c, 36)}")
        if n in closed:
            worst = max(abs(a - b) for a, b in zip(q, closed[n]))
            print(f"    closed-form agreement: {mp.nstr(worst, 3)}")
        for j in (n + 1, n + 2):
            pred = mp.fsum(q[i] * mp.mpf(j) ** i for i in range(n + 1)) + a_series(j, n)
            print(f"    extra anchor z={j}: error {mp.nstr(pred - log_gn_int(n, j + 1), 3)}")


if __name__ == "__main__":
    main()

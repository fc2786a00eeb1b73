"""Regenerate the orthogonal wavelet filter table in src/upcall/wavelets.py.

Filters are derived from their defining equations rather than copied from a
library, so the table can be rebuilt and audited offline:

  * Daubechies dbN: spectral factorization of the maximally-flat half-band
    polynomial, minimum-phase (extremal phase) root selection.
  * Symlets symN: same polynomial, root selection chosen by brute force to
    minimize phase nonlinearity (least-asymmetric factorization).
  * Coiflets coifK: Gauss-Newton solve of the coiflet system (orthonormality,
    2K vanishing wavelet moments, 2K-1 vanishing scaling moments about the
    filter center), seeded from low-precision published values.

Every filter is polished with scipy.optimize.least_squares on the exact
defining system until the residual is at machine precision, then verified:
sum(h) = sqrt(2), double-shift orthonormality, and vanishing moments, all to
< 1e-12.

Run:  python tools/make_wavelet_table.py   (prints the table dict)
"""

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import least_squares

SQRT2 = np.sqrt(2.0)


def halfband_roots(n):
    """Roots (in z) of the degree-(n-1) maximally flat residual polynomial.

    |m0(w)|^2 = cos(w/2)^(2n) * sum_k C(n-1+k, k) sin(w/2)^(2k); substituting
    y = (2 - z - 1/z)/4 turns the sum into a symmetric Laurent polynomial in z
    whose roots come in reciprocal pairs.
    """
    from math import comb
    py = np.array([comb(n - 1 + k, k) for k in range(n)], dtype=float)
    # y = (2 - z - 1/z)/4 -> multiply by z^(n-1) to get an ordinary polynomial
    # in z of degree 2(n-1).
    acc = np.zeros(2 * n - 1)
    ybase = np.array([-0.25, 0.5, -0.25])  # z^-1 * (y as polynomial in z)
    for k, c in enumerate(py):
        term = np.array([1.0])
        for _ in range(k):
            term = P.polymul(term, ybase)
        # term is y^k * z^k; shift so every term carries z^(n-1) total
        shifted = np.zeros(2 * n - 1)
        shifted[n - 1 - k : n - 1 - k + len(term)] = term
        acc += c * shifted
    return np.roots(acc[::-1])


def filter_from_roots(n, chosen):
    """Scaling filter ((1+z)/2)^n times the chosen residual roots, sum=sqrt2."""
    q = np.array([1.0 + 0j])
    for r in chosen:
        q = P.polymul(q, np.array([-r, 1.0]))
    h = np.array([1.0])
    for _ in range(n):
        h = P.polymul(h, np.array([0.5, 0.5]))
    h = P.polymul(h, q).real
    return h * (SQRT2 / h.sum())


def group_reciprocal(roots):
    """Group roots into {r, 1/r} conjugate-closed clusters."""
    roots = list(roots)
    groups = []
    used = [False] * len(roots)
    for i, r in enumerate(roots):
        if used[i]:
            continue
        used[i] = True
        cluster = [r]
        for j in range(i + 1, len(roots)):
            if used[j]:
                continue
            s = roots[j]
            if (abs(s - 1 / r) < 1e-7 or abs(s - np.conj(r)) < 1e-7
                    or abs(s - 1 / np.conj(r)) < 1e-7):
                used[j] = True
                cluster.append(s)
        groups.append(cluster)
    return groups


def pick_min_phase(groups):
    chosen = []
    for g in groups:
        inside = [r for r in g if abs(r) < 1.0]
        chosen.extend(inside)
    return chosen


def pick_least_asymmetric(n, groups):
    """Enumerate root selections, keep the one with flattest phase."""
    import itertools
    options = []
    for g in groups:
        inside = [r for r in g if abs(r) < 1.0]
        outside = [r for r in g if abs(r) >= 1.0]
        options.append([inside, outside] if outside else [inside])
    best, best_dev = None, np.inf
    w = np.linspace(0.05, np.pi - 0.05, 400)
    for combo in itertools.product(*options):
        chosen = [r for part in combo for r in part]
        h = filter_from_roots(n, chosen)
        z = np.exp(-1j * np.outer(w, np.arange(len(h))))
        phase = np.unwrap(np.angle(z @ h))
        # deviation from the best-fit linear (pure delay) phase
        a = np.vstack([w, np.ones_like(w)]).T
        resid = phase - a @ np.linalg.lstsq(a, phase, rcond=None)[0]
        dev = np.max(np.abs(resid))
        if dev < best_dev - 1e-12:
            best_dev, best = dev, h
    return best


def defining_residual(h, n_wav_moments, n_scal_moments=0, center=None):
    """Stack: sum rule, double-shift orthonormality, vanishing moments.

    Wavelet moments k=1..n_wav_moments-1 (k=0 is implied by orthonormality);
    scaling moments k=1..n_scal_moments about `center` for coiflets.
    """
    L = len(h)
    eqs = [h.sum() - SQRT2]
    for m in range(L // 2):
        v = np.dot(h[: L - 2 * m], h[2 * m :]) - (1.0 if m == 0 else 0.0)
        eqs.append(v)
    g = ((-1.0) ** np.arange(L)) * h[::-1]
    ns = np.arange(L, dtype=float)
    for k in range(1, n_wav_moments):
        eqs.append(np.dot(g, (ns / L) ** k))  # scaled so residuals are O(1)
    for k in range(1, n_scal_moments + 1):
        eqs.append(np.dot(h, ((ns - center) / L) ** k))
    return np.array(eqs)


def defining_jacobian(h, n_wav_moments, n_scal_moments=0, center=None):
    L = len(h)
    rows = [np.ones(L)]
    for m in range(L // 2):
        row = np.zeros(L)
        row[: L - 2 * m] += h[2 * m :]
        row[2 * m :] += h[: L - 2 * m]
        rows.append(row)
    j = np.arange(L, dtype=float)
    for k in range(1, n_wav_moments):
        rows.append(((-1.0) ** (L - 1 - j)) * (((L - 1 - j) / L) ** k))
    for k in range(1, n_scal_moments + 1):
        rows.append(((j - center) / L) ** k)
    return np.vstack(rows)


def polish(h, n_wav_moments, n_scal_moments=0, center=None):
    args = (n_wav_moments, n_scal_moments, center)
    h = least_squares(defining_residual, h, args=args,
                      xtol=3e-16, ftol=3e-16, gtol=3e-16, method="lm").x
    if np.max(np.abs(defining_residual(h, *args))) > 1e-14:
        h = polish_mp(h, *args)
    assert np.max(np.abs(defining_residual(h, *args))) < 5e-14
    return h


def polish_mp(h, n_wav_moments, n_scal_moments, center, digits=60):
    """Newton in 60-digit arithmetic; immune to the near-singular Jacobian."""
    from mpmath import mp, matrix, qr_solve, sqrt, mpf, norm

    mp.dps = digits
    L = len(h)
    x = matrix([mpf(float(v)) for v in h])
    s2 = sqrt(mpf(2))

    def res_jac(x):
        eqs, rows = [], []
        eqs.append(sum(x) - s2)
        rows.append([mpf(1)] * L)
        for m in range(L // 2):
            eqs.append(sum(x[n] * x[n + 2 * m] for n in range(L - 2 * m))
                       - (1 if m == 0 else 0))
            row = [mpf(0)] * L
            for n in range(L - 2 * m):
                row[n] += x[n + 2 * m]
                row[n + 2 * m] += x[n]
            rows.append(row)
        for k in range(1, n_wav_moments):
            eqs.append(sum((-1) ** n * x[L - 1 - n] * (mpf(n) / L) ** k
                           for n in range(L)))
            row = [mpf(0)] * L
            for n in range(L):
                row[L - 1 - n] = (-1) ** n * (mpf(n) / L) ** k
            rows.append(row)
        for k in range(1, n_scal_moments + 1):
            eqs.append(sum(x[n] * ((mpf(n) - center) / L) ** k
                           for n in range(L)))
            rows.append([((mpf(n) - center) / L) ** k for n in range(L)])
        return matrix(eqs), matrix(rows)

    # Newton converges only linearly here (singular Jacobian at the root),
    # so allow plenty of iterations; each one costs milliseconds.
    for _ in range(250):
        f, J = res_jac(x)
        if norm(f, "inf") < mpf(10) ** (-digits + 25):
            break
        step = qr_solve(J, -f)[0]
        x = x + step
    f, _ = res_jac(x)
    assert norm(f, "inf") < mpf(10) ** (-30)
    return np.array([float(v) for v in x])


# Low-precision seeds for the coiflet branch selection (classic published
# values, reconstruction-lowpass orientation, ~6 significant digits).
COIF_SEEDS = {
    1: [-0.072733, 0.337898, 0.852572, 0.384865, -0.072733, -0.015656],
    2: [0.016387, -0.041465, -0.067373, 0.386110, 0.812724, 0.417005,
        -0.076489, -0.059434, 0.023680, 0.005611, -0.001823, -0.000721],
    3: [-0.003794, 0.007783, 0.023453, -0.065772, -0.061123, 0.405177,
        0.793777, 0.428483, -0.071800, -0.082302, 0.034555, 0.015881,
        -0.009008, -0.002575, 0.001117, 0.000466, -0.000071, -0.000035],
    4: [0.000892, -0.001629, -0.007346, 0.016069, 0.026682, -0.081267,
        -0.056077, 0.415308, 0.782239, 0.434386, -0.066627, -0.096220,
        0.039334, 0.025082, -0.015212, -0.005658, 0.003751, 0.001267,
        -0.000589, -0.000260, 0.000062, 0.000031, -0.000003, -0.000002],
    5: [-0.000212, 0.000359, 0.002178, -0.004159, -0.010131, 0.023408,
        0.028168, -0.091920, -0.052043, 0.421566, 0.774290, 0.437992,
        -0.062036, -0.105574, 0.041289, 0.032684, -0.019762, -0.009164,
        0.006764, 0.002433, -0.001663, -0.000638, 0.000302, 0.000141,
        -0.000041, -0.000021, 0.000004, 0.000002, -0.0000003, -0.0000002],
}


def make_table():
    table = {}
    for n in range(1, 8):
        if n == 1:
            h = np.array([SQRT2 / 2, SQRT2 / 2])
        else:
            groups = group_reciprocal(halfband_roots(n))
            h = polish(filter_from_roots(n, pick_min_phase(groups)), n)
            h = h[::-1]  # classic listings put the dominant taps first
        table[f"db{n}"] = h
    for n in range(2, 6):
        if n <= 3:
            table[f"sym{n}"] = table[f"db{n}"]  # sym2/sym3 coincide with db
            continue
        groups = group_reciprocal(halfband_roots(n))
        h = polish(pick_least_asymmetric(n, groups), n)
        # canonical orientation: larger leading energy in the second half
        if np.sum(h[: len(h) // 2] ** 2) > np.sum(h[len(h) // 2 :] ** 2):
            h = h[::-1]
        table[f"sym{n}"] = h
    for k in range(1, 6):
        x0 = np.array(COIF_SEEDS[k])
        x0 *= SQRT2 / x0.sum()
        ns = np.arange(len(x0), dtype=float)
        center = round(float(np.dot(ns, x0) / x0.sum()))
        h = polish(x0, 2 * k, n_scal_moments=2 * k - 1, center=center)
        table[f"coif{k}"] = h
    return table


def verify(table):
    for name, h in table.items():
        L = len(h)
        assert abs(h.sum() - SQRT2) < 1e-11, name
        assert abs(np.dot(h, h) - 1.0) < 1e-11, name
        for m in range(1, L // 2):
            assert abs(np.dot(h[: L - 2 * m], h[2 * m :])) < 1e-11, (name, m)
        print(f"{name}: len {L}, sum-sqrt2 {h.sum()-SQRT2:+.2e}, "
              f"norm-1 {np.dot(h,h)-1:+.2e}")


if __name__ == "__main__":
    table = make_table()
    verify(table)
    print()
    print("FILTER_TABLE = {")
    for name, h in table.items():
        vals = ",\n        ".join(repr(float(v)) for v in h)
        print(f'    "{name}": (\n        {vals},\n    ),')
    print("}")

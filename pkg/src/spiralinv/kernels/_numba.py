"""Numba backend: fused per-sample loops over the short coefficient arrays."""

import numpy as np
from numba import njit

_GL_X = np.array([-0.9061798459386640, -0.5384693101056831, 0.0,
                  0.5384693101056831, 0.9061798459386640])
_GL_W = np.array([0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                  0.4786286704993665, 0.2369268850561891])


@njit(cache=True)
def _horner(c, t):
    r = 0.0
    for i in range(len(c) - 1, -1, -1):
        r = r * t + c[i]
    return r


@njit(cache=True)
def _derivs(c):
    n = max(len(c) - 1, 1)
    d = np.zeros(n)
    for i in range(1, len(c)):
        d[i - 1] = i * c[i]
    return d


@njit(cache=True)
def rational_frame(xn, yn, dn, ts):
    dx1, dy1, dw1 = _derivs(xn), _derivs(yn), _derivs(dn)
    dx2, dy2, dw2 = _derivs(dx1), _derivs(dy1), _derivs(dw1)
    n = len(ts)
    x = np.empty(n)
    y = np.empty(n)
    dxdt = np.empty(n)
    dydt = np.empty(n)
    k = np.empty(n)
    for i in range(n):
        t = ts[i]
        X, Y, W = _horner(xn, t), _horner(yn, t), _horner(dn, t)
        Xp, Yp, Wp = _horner(dx1, t), _horner(dy1, t), _horner(dw1, t)
        Xpp, Ypp, Wpp = _horner(dx2, t), _horner(dy2, t), _horner(dw2, t)
        U = Xp * W - X * Wp
        V = Yp * W - Y * Wp
        Up = Xpp * W - X * Wpp
        Vp = Ypp * W - Y * Wpp
        W2 = W * W
        g2 = U * U + V * V
        if W2 > 0.0:
            x[i] = X / W
            y[i] = Y / W
            dxdt[i] = U / W2
            dydt[i] = V / W2
        else:
            x[i] = np.nan
            y[i] = np.nan
            dxdt[i] = np.nan
            dydt[i] = np.nan
        if g2 > 0.0:
            k[i] = (U * Vp - Up * V) * W2 / g2 ** 1.5
        else:
            k[i] = np.nan
    return x, y, dxdt, dydt, k


@njit(cache=True)
def speeds(xn, yn, dn, ts):
    dx1, dy1, dw1 = _derivs(xn), _derivs(yn), _derivs(dn)
    n = len(ts)
    out = np.empty(n)
    for i in range(n):
        t = ts[i]
        X, Y, W = _horner(xn, t), _horner(yn, t), _horner(dn, t)
        U = _horner(dx1, t) * W - X * _horner(dw1, t)
        V = _horner(dy1, t) * W - Y * _horner(dw1, t)
        out[i] = np.sqrt(U * U + V * V) / (W * W)
    return out


@njit(cache=True)
def arc_length_cumulative(xn, yn, dn, ts):
    dx1, dy1, dw1 = _derivs(xn), _derivs(yn), _derivs(dn)
    n = len(ts)
    s = np.empty(n)
    s[0] = 0.0
    for i in range(n - 1):
        a = ts[i]
        h = ts[i + 1] - a
        acc = 0.0
        for g in range(5):
            t = a + 0.5 * h * (_GL_X[g] + 1.0)
            X, Y, W = _horner(xn, t), _horner(yn, t), _horner(dn, t)
            U = _horner(dx1, t) * W - X * _horner(dw1, t)
            V = _horner(dy1, t) * W - Y * _horner(dw1, t)
            acc += _GL_W[g] * np.sqrt(U * U + V * V) / (W * W)
        s[i + 1] = s[i] + 0.5 * h * acc
    return s

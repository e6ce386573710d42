"""Vectorized numpy backend."""

import numpy as np

# 5-point Gauss-Legendre on [-1, 1]
_GL_X = np.array([-0.9061798459386640, -0.5384693101056831, 0.0,
                  0.5384693101056831, 0.9061798459386640])
_GL_W = np.array([0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                  0.4786286704993665, 0.2369268850561891])


def _horner(c, t):
    r = np.zeros_like(t)
    for a in c[::-1]:
        r = r * t + a
    return r


def _uvw(xn, yn, dn, t):
    dx = np.arange(1, len(xn)) * xn[1:]
    dy = np.arange(1, len(yn)) * yn[1:]
    dw = np.arange(1, len(dn)) * dn[1:]
    X, Y, W = _horner(xn, t), _horner(yn, t), _horner(dn, t)
    Xp, Yp, Wp = _horner(dx, t), _horner(dy, t), _horner(dw, t)
    U = Xp * W - X * Wp
    V = Yp * W - Y * Wp
    return X, Y, W, U, V, dx, dy, dw


def rational_frame(xn, yn, dn, t):
    X, Y, W, U, V, dx, dy, dw = _uvw(xn, yn, dn, t)
    ddx = np.arange(1, len(dx)) * dx[1:] if len(dx) > 1 else np.zeros(1)
    ddy = np.arange(1, len(dy)) * dy[1:] if len(dy) > 1 else np.zeros(1)
    ddw = np.arange(1, len(dw)) * dw[1:] if len(dw) > 1 else np.zeros(1)
    Up = _horner(ddx, t) * W - X * _horner(ddw, t)
    Vp = _horner(ddy, t) * W - Y * _horner(ddw, t)
    W2 = W * W
    g2 = U * U + V * V
    with np.errstate(divide="ignore", invalid="ignore"):
        x = np.where(W2 > 0.0, X / np.where(W == 0.0, 1.0, W), np.nan)
        y = np.where(W2 > 0.0, Y / np.where(W == 0.0, 1.0, W), np.nan)
        dxdt = np.where(W2 > 0.0, U / np.where(W2 == 0.0, 1.0, W2), np.nan)
        dydt = np.where(W2 > 0.0, V / np.where(W2 == 0.0, 1.0, W2), np.nan)
        k = np.where(g2 > 0.0,
                     (U * Vp - Up * V) * W2 / np.power(np.where(g2 == 0.0, 1.0, g2), 1.5),
                     np.nan)
    return x, y, dxdt, dydt, k


def speeds(xn, yn, dn, t):
    _, _, W, U, V, _, _, _ = _uvw(xn, yn, dn, t)
    return np.sqrt(U * U + V * V) / (W * W)


def arc_length_cumulative(xn, yn, dn, t):
    a = t[:-1]
    h = np.diff(t)
    nodes = a[:, None] + (0.5 * h)[:, None] * (_GL_X[None, :] + 1.0)
    sp = speeds(xn, yn, dn, nodes.ravel()).reshape(nodes.shape)
    seg = (0.5 * h) * (sp @ _GL_W)
    s = np.empty_like(t)
    s[0] = 0.0
    np.cumsum(seg, out=s[1:])
    return s

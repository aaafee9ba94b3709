"""Pure-Python twins of the compiled kernels in ``_kernels.pyx``."""
import math

import numpy as np


def _off_norm(a):
    return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))


def jacobi_sweeps(a, tol, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        if _off_norm(a) < tol:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                if apq == 0.0:
                    continue
                theta = (float(a[q, q]) - float(a[p, p])) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
    return -1


def cycle_exists(adj, length, start, first, required, required_edges):
    n = adj.shape[0]
    if length < 3 or length > n:
        return False
    if first >= 0 and not adj[start, first]:
        return False
    nbrs = [np.flatnonzero(row).tolist() for row in adj]
    required = [int(v) for v in required]
    pairs = [(int(required_edges[i]), int(required_edges[i + 1]))
             for i in range(0, len(required_edges), 2)]
    pos = {start: 0}
    path = [start]
    if first >= 0:
        pos[first] = 1
        path.append(first)

    def closes():
        if any(v not in pos for v in required):
            return False
        for x, y in pairs:
            if x not in pos or y not in pos:
                return False
            d = abs(pos[x] - pos[y])
            if d != 1 and d != length - 1:
                return False
        return True

    def extend():
        depth = len(path)
        last = path[-1]
        if depth == length:
            return bool(adj[last, start]) and closes()
        if sum(v not in pos for v in required) > length - depth:
            return False
        for y in nbrs[last]:
            if y in pos:
                continue
            pos[y] = depth
            path.append(y)
            found = extend()
            path.pop()
            del pos[y]
            if found:
                return True
        return False

    return extend()

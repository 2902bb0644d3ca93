# Copyright 2026 The hw Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent brute-force oracles for frozen expected values in the C++ tests.

Enumerates SL_2(Z/q) by scanning all 2x2 matrices, builds dense Cayley operators
with numpy, runs plain BFS. Shares no code with the C++ implementation.
"""
import itertools
import math
from collections import deque

import numpy as np
import mpmath


def sl2(q):
    els = [m for m in itertools.product(range(q), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % q == 1]
    return els


def mul(a, b, q):
    return ((a[0] * b[0] + a[1] * b[2]) % q, (a[0] * b[1] + a[1] * b[3]) % q,
            (a[2] * b[0] + a[3] * b[2]) % q, (a[2] * b[1] + a[3] * b[3]) % q)


def std_gens(q):
    return [(1, 0, 0, 1), (1, 1, 0, 1), (1, q - 1, 0, 1), (1, 0, 1, 1), (1, 0, q - 1, 1)]


def gap_dense(els, gens, q):
    idx = {e: i for i, e in enumerate(els)}
    n = len(els)
    m = np.zeros((n, n))
    w = 1.0 / len(gens)
    for h in els:
        for s in gens:
            m[idx[mul(s, h, q)], idx[h]] += w
    m -= 1.0 / n
    ev = np.linalg.eigvalsh((m + m.T) / 2)
    return 1 - max(abs(ev))


def bfs_diam(els, gens, q):
    ident = (1, 0, 0, 1)
    dist = {ident: 0}
    dq = deque([ident])
    while dq:
        x = dq.popleft()
        for s in gens:
            y = mul(x, s, q)
            if y not in dist:
                dist[y] = dist[x] + 1
                dq.append(y)
    assert len(dist) == len(els)
    return max(dist.values())


if __name__ == "__main__":
    mpmath.mp.dps = 40
    print("orders", {q: len(sl2(q)) for q in (2, 3, 4, 5)})
    wl = 2 * mpmath.floor((10 - mpmath.mpf(8) ** (-mpmath.mpf(1) / 10)) * 512)
    print("walk_length(C0=1,A=2,x=e^8) =", wl)
    print("Z/17 gap", repr(1 - (1 + 2 * math.cos(2 * math.pi / 17)) / 3))
    for q in (3, 5, 7):
        els = sl2(q)
        g = std_gens(q)
        print(f"SL2({q}) std gap", repr(gap_dense(els, g, q)), "diam", bfs_diam(els, g, q))
    for q in (4, 15):
        els = sl2(q)
        print(f"SL2({q}) diam", bfs_diam(els, std_gens(q), q))


def class_dims(els, q):
    """Irrep dimensions from a random combination of class-sum matrices, numerically."""
    idx = {e: i for i, e in enumerate(els)}
    n = len(els)
    inv = {e: next(f for f in els if mul(e, f, q) == (1, 0, 0, 1)) for e in els}
    cls = []
    seen = set()
    for e in els:
        if e in seen:
            continue
        c = {mul(mul(inv[g], e, q), g, q) for g in els}
        seen |= c
        cls.append(sorted(c))
    r = len(cls)
    cid = {e: k for k, c in enumerate(cls) for e in c}
    a = np.zeros((r, r, r))
    for k, c in enumerate(cls):
        z = c[0]
        for y in els:
            x = mul(z, inv[y], q)
            a[cid[x], cid[y], k] += 1
    rng = np.random.default_rng(1)
    m = sum(rng.normal() * a[i] for i in range(r))
    _, vecs = np.linalg.eig(m)
    e0 = cid[(1, 0, 0, 1)]
    dims = []
    for j in range(r):
        w = vecs[:, j] / vecs[e0, j]
        s = sum(w[k] * w[cid[inv[cls[k][0]]]] / len(cls[k]) for k in range(r))
        dims.append(int(round(math.sqrt((n / s).real))))
    return r, sorted(dims)


def a2_weights(r):
    w1 = np.array([2, -1, -1]) / 3
    w2 = np.array([1, 1, -2]) / 3
    out = []
    for a in range(10):
        for b in range(10):
            v = a * w1 + b * w2
            if v @ v <= r * r + 1e-12:
                out.append((a, b))
    return out


if __name__ == "__main__":
    for q in (3, 5, 7):
        print(f"SL2({q}) classes/dims", class_dims(sl2(q), q))
    print("A2 dominant weights r=2", a2_weights(2))
    print("SU2 triple norm", repr((1 + 2 / math.sqrt(5)) / 3), "gap", repr(1 - (1 + 2 / math.sqrt(5)) / 3))

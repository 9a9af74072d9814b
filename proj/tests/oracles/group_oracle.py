# Copyright (C) 2026 The pembed Authors.
# This program is Licensed under the Apache License, Version 2.0
# (the "License"); you may not use this file except in compliance
# with the License. You may obtain a copy of the License at
#   http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License. See accompanying LICENSE file.

"""Independent brute-force oracle for the group-side expected values.

Builds groups as permutation/tuple objects (not tables), enumerates
homomorphisms by trying all generator images, and computes |Z^1| and
|B^1| from the full system of cocycle equations over all pairs (s, t).
Run: python3 tests/oracles/group_oracle.py
"""
import itertools


def perm_mul(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


class Group:
    def __init__(self, elems, mul):
        self.elems = list(elems)
        self.mul = mul
        self.idx = {e: i for i, e in enumerate(self.elems)}
        self.e = next(x for x in self.elems
                      if all(mul(x, y) == y for y in self.elems))

    def inv(self, a):
        return next(b for b in self.elems if self.mul(a, b) == self.e)

    def conj(self, g, x):
        return self.mul(self.mul(g, x), self.inv(g))


def cyclic(n):
    return Group(range(n), lambda a, b: (a + b) % n)


def sym(n):
    return Group(sorted(itertools.permutations(range(n))), perm_mul)


def sign(p):
    s = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            s ^= p[i] > p[j]
    return s


def fiber_power(Gam, f, n):
    tuples = [t for t in itertools.product(Gam.elems, repeat=n)
              if len({f(x) for x in t}) == 1]
    return Group(sorted(tuples, key=lambda t: [Gam.idx[x] for x in t]),
                 lambda a, b: tuple(Gam.mul(x, y) for x, y in zip(a, b)))


def all_maps_homs(A, B, constraint):
    """Every hom A -> B with constraint(a, image) for all a (full check)."""
    gens = []
    span = {A.e}
    def close(gs):
        S = {A.e}
        frontier = [A.e]
        while frontier:
            x = frontier.pop()
            for g in gs:
                y = A.mul(x, g)
                if y not in S:
                    S.add(y); frontier.append(y)
        return S
    for a in A.elems:
        if a not in span:
            gens.append(a); span = close(gens)
    out = []
    for imgs in itertools.product(B.elems, repeat=len(gens)):
        m = {A.e: B.e}
        frontier = [A.e]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for g, ig in zip(gens, imgs):
                y = A.mul(x, g); iy = B.mul(m[x], ig)
                if y in m:
                    if m[y] != iy:
                        ok = False; break
                else:
                    m[y] = iy; frontier.append(y)
        if not ok:
            continue
        if all(m[A.mul(a, b)] == B.mul(m[a], m[b]) for a in A.elems for b in A.elems) \
                and all(constraint(a, m[a]) for a in A.elems):
            out.append(m)
    return out


def rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def h1_dims(Pi, act, p):
    """act(s, v) -> v for r = 1 modules; full system over all pairs."""
    n = len(Pi.elems)
    rows = []
    for s in Pi.elems:
        for t in Pi.elems:
            row = [0] * n
            row[Pi.idx[Pi.mul(s, t)]] += 1
            row[Pi.idx[s]] -= 1
            row[Pi.idx[t]] -= act(s, 1)
            rows.append([x % p for x in row])
    z1 = n - rank_mod_p(rows, p)
    cob = [[(act(s, 1) - 1) % p for s in Pi.elems]]
    b1 = rank_mod_p(cob, p)
    return z1, b1, z1 - b1


def classes(sols, P, Gam):
    seen = {}
    cls = 0
    for i, b in enumerate(sols):
        key = tuple(sorted(b.items(), key=lambda kv: str(kv[0])))
        if key in seen:
            continue
        for x in P:
            c = {k: Gam.conj(x, v) for k, v in b.items()}
            seen.setdefault(tuple(sorted(c.items(), key=lambda kv: str(kv[0]))), cls)
        cls += 1
    return cls


if __name__ == "__main__":
    Z4, Z2, S3 = cyclic(4), cyclic(2), sym(3)
    # Z/4 -> Z/2 lift.
    sols = all_maps_homs(Z4, Z4, lambda a, b: b % 2 == a % 2)
    print("Z4 weak solutions", len(sols), "classes", classes(sols, [0, 2], Z4),
          "H1", h1_dims(Z4, lambda s, v: v, 2))
    # S_3 sign problem.
    sols = all_maps_homs(S3, S3, lambda a, b: sign(a) == sign(b))
    A3 = [x for x in S3.elems if sign(x) == 0]
    proper = sum(len(set(m.values())) == 6 for m in sols)
    print("S3 weak solutions", len(sols), "proper", proper,
          "classes", classes(sols, A3, S3),
          "H1", h1_dims(S3, lambda s, v: v if sign(s) == 0 else -v, 3))
    # Trivial Pi = Z/4 acting on F_2: |Hom(Z/4, Z/2)|.
    print("Z4 on F2 trivial H1", h1_dims(Z4, lambda s, v: v, 2))
    # Fiber powers.
    for name, Gam, f, p, act in [
            ("Z4", Z4, lambda g: g % 2, 2, lambda g, v: v),
            ("S3", S3, sign, 3, lambda g, v: v if sign(g) == 0 else -v)]:
        for n in (2, 3):
            Pi = fiber_power(Gam, f, n)
            z1, b1, h = h1_dims(Pi, lambda s, v: act(s[0], v), p)
            print(f"{name} fiber n={n} order={len(Pi.elems)} dimZ1={z1} dimB1={b1} |H1|={p**h}")
    # G trivial, P = F_2: Gamma = Z/2, fiber square = Klein four.
    V4 = fiber_power(Z2, lambda g: 0, 2)
    print("V4 H1", 2 ** h1_dims(V4, lambda s, v: v, 2)[2])
    # Cocycle counts (no B^1 quotient) for small actions, all pairs.
    for name, Pi, p, act in [("Z2 F2", Z2, 2, lambda s, v: v),
                             ("Z3 F2", cyclic(3), 2, lambda s, v: v),
                             ("S3 F3 sign", S3, 3, lambda s, v: v if sign(s) == 0 else -v)]:
        print(name, "Z1 count", p ** h1_dims(Pi, act, p)[0])

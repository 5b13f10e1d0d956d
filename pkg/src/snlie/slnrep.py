"""Type-A root data, weight multiplicities and explicit sl_n irreducibles.

Weights live in two coordinate systems: dominant highest weights as tuples of
n-1 non-negative integers (fundamental-weight coordinates), and weights of a
module as the integer vector c with mu = lambda - sum_i c_i alpha_i.

Multiplicities come from the Freudenthal recursion; the Weyl dimension
formula is kept as an independent oracle.  Explicit modules are built from
the sl_n Verma module by quotienting out the radical of the contravariant
form, one weight space at a time.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import rank, solve

Weight = Tuple[int, ...]  # fundamental-weight coordinates, length n-1


def _check_weight(lam: Sequence[int], n: int) -> Weight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != n - 1:
        raise ValueError("weight needs n-1 coordinates")
    if any(x < 0 for x in lam):
        raise ValueError("weight must be dominant integral")
    return lam


class RootDatum:
    """Inner products and coordinate conversions for type A_{n-1}.

    Normalization: (alpha_i, alpha_i) = 1, (alpha_i, alpha_j) = -1/2 for
    adjacent simple roots, 0 otherwise.
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("n must be >= 2")
        self.n = n
        r = n - 1
        self.rank = r
        self.gram = [[Fraction(0)] * r for _ in range(r)]
        for i in range(r):
            self.gram[i][i] = Fraction(1)
            if i + 1 < r:
                self.gram[i][i + 1] = Fraction(-1, 2)
                self.gram[i + 1][i] = Fraction(-1, 2)
        # positive roots alpha_a + ... + alpha_b as 0-based index pairs (a, b)
        self.positive_roots = [(a, b) for a in range(r) for b in range(a, r)]
        self.delta_root = [Fraction(sum(self.fundamental_weight_root(i)[j]
                                        for i in range(r)))
                           for j in range(r)]

    def fundamental_weight_root(self, i: int) -> List[Fraction]:
        """pi_{i+1} in simple-root coordinates (0-based i)."""
        n = self.n
        return [Fraction((min(i, j) + 1) * (n - (max(i, j) + 1)), n)
                for j in range(n - 1)]

    def weight_to_root(self, lam: Weight) -> List[Fraction]:
        r = self.rank
        out = [Fraction(0)] * r
        for i, li in enumerate(lam):
            if li:
                pi = self.fundamental_weight_root(i)
                for j in range(r):
                    out[j] += li * pi[j]
        return out

    def root_vector(self, root: Tuple[int, int]) -> List[Fraction]:
        a, b = root
        return [Fraction(1) if a <= j <= b else Fraction(0) for j in range(self.rank)]

    def inner(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        acc = Fraction(0)
        for i, ui in enumerate(u):
            if ui:
                row = self.gram[i]
                acc += ui * sum(row[j] * v[j] for j in range(self.rank) if v[j])
        return acc

    def cartan_pairing(self, c: Sequence[int], lam: Weight, a: int, b: int) -> Fraction:
        """Value of (E_aa - E_bb) on the weight lambda - sum c_i alpha_i; 1-based a, b."""
        if a == b:
            return Fraction(0)
        sign = 1
        if a > b:
            a, b = b, a
            sign = -1
        val = Fraction(sum(lam[a - 1:b - 1]))
        for t, ct in enumerate(c, start=1):  # alpha_t = eps_t - eps_{t+1}
            if ct:
                val -= ct * ((t == a) - (t + 1 == a) - (t == b) + (t + 1 == b))
        return sign * val


def weyl_dimension(lam: Sequence[int], n: int) -> int:
    """Product formula for the dimension of the irreducible with weight lam."""
    lam = _check_weight(lam, n)
    num = 1
    den = 1
    for a in range(n - 1):
        for b in range(a, n - 1):
            num *= sum(lam[a:b + 1]) + (b - a + 1)
            den *= b - a + 1
    assert num % den == 0
    return num // den


def freudenthal_multiplicities(lam: Sequence[int], n: int) -> Dict[Tuple[int, ...], int]:
    """Weight multiplicities of L(lam), keyed by c with mu = lam - sum c_i alpha_i."""
    lam = _check_weight(lam, n)
    datum = RootDatum(n)
    r = datum.rank
    lam_root = datum.weight_to_root(lam)
    low_root = datum.weight_to_root(tuple(reversed(lam)))
    dbox = [int(lam_root[j] + low_root[j]) for j in range(r)]
    delta = datum.delta_root
    lam_delta = [lam_root[j] + delta[j] for j in range(r)]
    norm_top = datum.inner(lam_delta, lam_delta)
    roots = [datum.root_vector(rt) for rt in datum.positive_roots]

    mults: Dict[Tuple[int, ...], int] = {}
    # enumerate the box by increasing height so the recursion only looks upward
    def box(idx, prefix):
        if idx == r:
            yield prefix
            return
        for v in range(dbox[idx] + 1):
            yield from box(idx + 1, prefix + (v,))

    candidates = sorted(box(0, ()), key=lambda c: (sum(c), c))
    for c in candidates:
        if sum(c) == 0:
            mults[c] = 1
            continue
        mu_root = [lam_root[j] - c[j] for j in range(r)]
        mu_delta = [mu_root[j] + delta[j] for j in range(r)]
        denom = norm_top - datum.inner(mu_delta, mu_delta)
        if denom == 0:
            continue
        acc = Fraction(0)
        for alpha in roots:
            k = 1
            while True:
                c2 = tuple(c[j] - k * int(alpha[j]) for j in range(r))
                if any(v < 0 for v in c2):
                    break
                m2 = mults.get(c2, 0)
                if m2:
                    shifted = [mu_root[j] + k * alpha[j] for j in range(r)]
                    acc += m2 * datum.inner(shifted, alpha)
                k += 1
        val = 2 * acc / denom
        if val:
            assert val.denominator == 1 and val > 0
            mults[c] = int(val)
    return mults


def exceptional_check(lam: Sequence[int]) -> Optional[int]:
    """Index p if lam is the zero weight (p=0) or the p-th unit vector, else None."""
    lam = tuple(int(x) for x in lam)
    if all(x == 0 for x in lam):
        return 0
    if sum(lam) == 1:
        return lam.index(1) + 1
    return None


class SlnVerma:
    """PBW computations in the sl_n Verma module with highest weight lam.

    Basis monomials are exponent vectors over the negative root vectors
    E_{j,i} (i<j) in a fixed order.  Generators are ("E", a, b) with a != b
    (1-based) and ("H", a, b) for E_aa - E_bb.
    """

    def __init__(self, n: int, lam: Weight):
        self.n = n
        self.lam = lam
        self.neg = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        self.index = {p: t for t, p in enumerate(self.neg)}
        self.zero_mono = (0,) * len(self.neg)
        self._act_cache: Dict = {}

    def root_of(self, pair: Tuple[int, int]) -> Tuple[int, ...]:
        i, j = pair
        return tuple(1 if i <= t + 1 <= j - 1 else 0 for t in range(self.n - 1))

    def mono_weight_c(self, mono) -> Tuple[int, ...]:
        c = [0] * (self.n - 1)
        for t, e in enumerate(mono):
            if e:
                rt = self.root_of(self.neg[t])
                for k in range(self.n - 1):
                    c[k] += e * rt[k]
        return tuple(c)

    def _cartan_value(self, a: int, b: int, mono) -> Fraction:
        c = self.mono_weight_c(mono)
        datum_val = Fraction(0)
        # inline the pairing to avoid building a RootDatum
        sign = 1
        if a > b:
            a, b = b, a
            sign = -1
        datum_val = Fraction(sum(self.lam[a - 1:b - 1]))
        for t, ct in enumerate(c, start=1):
            if ct:
                datum_val -= ct * ((t == a) - (t + 1 == a) - (t == b) + (t + 1 == b))
        return sign * datum_val

    def act(self, gen, mono) -> Dict[tuple, Fraction]:
        key = (gen, mono)
        cached = self._act_cache.get(key)
        if cached is not None:
            return cached
        result = self._act_uncached(gen, mono)
        self._act_cache[key] = result
        return result

    def _act_uncached(self, gen, mono) -> Dict[tuple, Fraction]:
        if gen[0] == "H":
            val = self._cartan_value(gen[1], gen[2], mono)
            return {mono: val} if val else {}
        _, a, b = gen
        if a > b:
            t = self.index[(b, a)]
            first = next((r for r, e in enumerate(mono) if e), None)
            if first is None or t <= first:
                out = list(mono)
                out[t] += 1
                return {tuple(out): Fraction(1)}
        if mono == self.zero_mono:
            return {}  # raising operator kills the highest weight vector
        r = next(i for i, e in enumerate(mono) if e)
        i, j = self.neg[r]  # F_r = E_{j,i}
        sub = list(mono)
        sub[r] -= 1
        sub = tuple(sub)
        out: Dict[tuple, Fraction] = {}
        # g * F_r * rest = F_r * (g * rest) + [g, F_r] * rest
        inner = self.act(gen, sub)
        for m2, c2 in inner.items():
            for m3, c3 in self.act(("E", j, i), m2).items():
                _acc(out, m3, c2 * c3)
        # [E_{a,b}, E_{j,i}] = delta_{b,j} E_{a,i} - delta_{i,a} E_{j,b}
        comm: List[Tuple[int, tuple]] = []
        if b == j and a == i:
            comm.append((1, ("H", a, b)))
        else:
            if b == j:
                comm.append((1, ("E", a, i)))
            if i == a:
                comm.append((-1, ("E", j, b)))
        for sign, g2 in comm:
            for m2, c2 in self.act(g2, sub).items():
                _acc(out, m2, sign * c2)
        return {m: c for m, c in out.items() if c}

    def act_elem(self, gen, elem: Dict[tuple, Fraction]) -> Dict[tuple, Fraction]:
        out: Dict[tuple, Fraction] = {}
        for mono, c in elem.items():
            for m2, c2 in self.act(gen, mono).items():
                _acc(out, m2, c * c2)
        return {m: c for m, c in out.items() if c}

    def contravariant_form(self, ma, mb) -> Fraction:
        """<F^ma v, F^mb v> via the transpose antiautomorphism."""
        if self.mono_weight_c(ma) != self.mono_weight_c(mb):
            return Fraction(0)
        elem = {mb: Fraction(1)}
        for t, e in enumerate(ma):
            for _ in range(e):
                if not elem:
                    return Fraction(0)
                i, j = self.neg[t]
                elem = self.act_elem(("E", i, j), elem)
        return elem.get(self.zero_mono, Fraction(0))

    def monomials_of_weight(self, c: Tuple[int, ...]) -> List[tuple]:
        roots = [self.root_of(p) for p in self.neg]
        out: List[tuple] = []

        def rec(t, remaining, prefix):
            if t == len(roots):
                if all(v == 0 for v in remaining):
                    out.append(tuple(prefix))
                return
            rt = roots[t]
            max_e = min((remaining[k] // rt[k] for k in range(len(rt)) if rt[k]),
                        default=0)
            if t == len(roots) - 1:
                candidates = range(max_e, max_e + 1) if rt else range(1)
            else:
                candidates = range(max_e + 1)
            for e in candidates:
                rem2 = tuple(remaining[k] - e * rt[k] for k in range(len(rt)))
                rec(t + 1, rem2, prefix + [e])

        rec(0, c, [])
        return sorted(out)


def _acc(d: Dict, key, val):
    if not val:
        return
    cur = d.get(key, Fraction(0)) + val
    if cur:
        d[key] = cur
    else:
        d.pop(key, None)


class WeightModule:
    """Explicit finite-dimensional irreducible sl_n module with action tables.

    Basis labels are integers; each carries its weight as the integer vector
    c (mu = lam - sum c_i alpha_i).  Tables exist for every E_{i,j}, i != j;
    Cartan elements act diagonally from the weights.
    """

    def __init__(self, n: int, highest: Weight, basis_weights: List[Tuple[int, ...]],
                 tables: Dict[Tuple[int, int], Dict[int, Dict[int, Fraction]]]):
        self.n = n
        self.highest = highest
        self.basis_weights = basis_weights
        self.dim = len(basis_weights)
        self.tables = tables
        self.weights: Dict[Tuple[int, ...], List[int]] = {}
        for idx, c in enumerate(basis_weights):
            self.weights.setdefault(c, []).append(idx)

    def highest_vector(self) -> Dict[int, Fraction]:
        return {0: Fraction(1)}

    def cartan_value(self, a: int, b: int, idx: int) -> Fraction:
        """(E_aa - E_bb) eigenvalue on basis vector idx."""
        c = self.basis_weights[idx]
        sign = 1
        if a > b:
            a, b = b, a
            sign = -1
        val = Fraction(sum(self.highest[a - 1:b - 1]))
        for t, ct in enumerate(c, start=1):
            if ct:
                val -= ct * ((t == a) - (t + 1 == a) - (t == b) + (t + 1 == b))
        return sign * val

    def act_e(self, i: int, j: int, vec: Dict[int, Fraction]) -> Dict[int, Fraction]:
        """Apply E_{i,j} (i != j) to a coefficient vector."""
        if not 1 <= i <= self.n and 1 <= j <= self.n:
            raise ValueError("index out of range")
        if i == j:
            raise ValueError("use act_cartan for diagonal elements")
        table = self.tables[(i, j)]
        out: Dict[int, Fraction] = {}
        for idx, c in vec.items():
            for ridx, rc in table.get(idx, {}).items():
                _acc(out, ridx, c * rc)
        return out

    def act_cartan(self, a: int, b: int, vec: Dict[int, Fraction]) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for idx, c in vec.items():
            _acc(out, idx, c * self.cartan_value(a, b, idx))
        return out


def build_irrep(lam: Sequence[int], n: int, max_dim: int = 200) -> WeightModule:
    """Construct L(lam) explicitly through the contravariant-form radical."""
    lam = _check_weight(lam, n)
    dim = weyl_dimension(lam, n)
    if dim > max_dim:
        raise ValueError("module dimension %d exceeds bound %d" % (dim, max_dim))
    mults = freudenthal_multiplicities(lam, n)
    verma = SlnVerma(n, lam)

    basis_monos: List[tuple] = []
    basis_weights: List[Tuple[int, ...]] = []
    weight_spaces: Dict[Tuple[int, ...], List[int]] = {}
    grams: Dict[Tuple[int, ...], List[List[Fraction]]] = {}

    for c in sorted(mults, key=lambda c: (sum(c), c)):
        mult = mults[c]
        chosen: List[tuple] = []
        gram: List[List[Fraction]] = []
        for mono in verma.monomials_of_weight(c):
            row = [verma.contravariant_form(mono, m2) for m2 in chosen]
            diag = verma.contravariant_form(mono, mono)
            cand = [g + [row[k]] for k, g in enumerate(gram)]
            cand.append(row + [diag])
            if rank(cand) == len(chosen) + 1:
                chosen.append(mono)
                gram = cand
            if len(chosen) == mult:
                break
        if len(chosen) != mult:
            raise RuntimeError("weight space %r: found %d independent vectors, "
                               "Freudenthal says %d" % (c, len(chosen), mult))
        start = len(basis_monos)
        weight_spaces[c] = list(range(start, start + mult))
        grams[c] = gram
        basis_monos.extend(chosen)
        basis_weights.extend([c] * mult)

    tables: Dict[Tuple[int, int], Dict[int, Dict[int, Fraction]]] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            table: Dict[int, Dict[int, Fraction]] = {}
            for idx, mono in enumerate(basis_monos):
                u = verma.act(("E", i, j), mono)
                if not u:
                    continue
                c_target = verma.mono_weight_c(next(iter(u)))
                ids = weight_spaces.get(c_target)
                if not ids:
                    continue  # image lies in the radical
                gram = grams[c_target]
                rhs = []
                for bidx in ids:
                    bmono = basis_monos[bidx]
                    rhs.append(sum((cu * verma.contravariant_form(bmono, mu)
                                    for mu, cu in u.items()), Fraction(0)))
                coeffs = solve(gram, rhs)
                assert coeffs is not None
                col = {ids[k]: coeffs[k] for k in range(len(ids)) if coeffs[k]}
                if col:
                    table[idx] = col
            tables[(i, j)] = table
    return WeightModule(n, lam, basis_weights, tables)

"""Finitely generated abelian groups as explicit products of cyclic factors.

A group is a product of factors, each either the infinite cyclic group
(modulus 0) or Z_n (modulus n >= 1).  Elements carry canonical coordinates:
finite-factor coordinates live in [0, n).  Subgroups are integer lattices
over the coordinate module together with the factor relations n_i * e_i,
so membership and canonical coset representatives come from a Hermite
normal form of that lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product as iproduct
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import BoundExceeded, PropertyViolation, ValidationError

Z = 0  # modulus denoting an infinite cyclic factor

SUBSET_SUM_MAX_LEN = 20
RAMSEY_MAX_LEN = 16
AP_MAX_K = 3
AP_MAX_STRIDE = 6
CHOICE_SPACE_BOUND = 1 << 20


@dataclass(frozen=True)
class GroupSpec:
    """Product of cyclic factors; modulus 0 means Z, n >= 1 means Z_n."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        for n in self.moduli:
            if not isinstance(n, int) or n < 0:
                raise ValidationError(f"factor modulus must be an integer >= 0, got {n!r}")

    @property
    def m(self) -> int:
        return len(self.moduli)

    def element(self, coords: Sequence[int]) -> "GroupElement":
        if len(coords) != self.m:
            raise ValidationError(
                f"expected {self.m} coordinates, got {len(coords)}")
        return GroupElement(self, self._reduce(tuple(coords)))

    def _reduce(self, coords: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(c % n if n else c for c, n in zip(coords, self.moduli))

    @property
    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.m)

    def is_finite(self) -> bool:
        return all(n != 0 for n in self.moduli)

    def order(self):
        if not self.is_finite():
            return math.inf
        out = 1
        for n in self.moduli:
            out *= n
        return out

    def elements(self) -> Iterator["GroupElement"]:
        """Enumerate all elements in lexicographic coordinate order (finite only)."""
        if not self.is_finite():
            raise ValidationError("cannot enumerate an infinite group")
        for coords in iproduct(*(range(n) for n in self.moduli)):
            yield GroupElement(self, coords)

    def to_json(self) -> dict:
        return {"factors": [{"kind": "Z"} if n == 0 else {"kind": "Zn", "n": n}
                            for n in self.moduli]}

    @staticmethod
    def from_json(data: dict) -> "GroupSpec":
        try:
            factors = data["factors"]
        except (KeyError, TypeError):
            raise ValidationError("group spec JSON needs a 'factors' list")
        moduli = []
        for f in factors:
            kind = f.get("kind")
            if kind == "Z":
                moduli.append(0)
            elif kind == "Zn":
                n = f.get("n")
                if not isinstance(n, int) or n < 1:
                    raise ValidationError(f"Zn factor needs integer n >= 1, got {n!r}")
                moduli.append(n)
            else:
                raise ValidationError(f"unknown factor kind {kind!r}")
        return GroupSpec(tuple(moduli))


@dataclass(frozen=True)
class GroupElement:
    spec: GroupSpec
    coords: tuple[int, ...]

    def _check(self, other: "GroupElement"):
        if self.spec != other.spec:
            raise ValidationError("elements of different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self.spec.element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self.spec.element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return self.spec.element(tuple(-a for a in self.coords))

    def scale(self, k: int) -> "GroupElement":
        return self.spec.element(tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def order(self):
        """Least k >= 1 with k*g = 0, or math.inf."""
        out = 1
        for a, n in zip(self.coords, self.spec.moduli):
            if n == 0:
                if a != 0:
                    return math.inf
            elif a != 0:
                out = math.lcm(out, n // math.gcd(a, n))
        return out

    def project(self, i: int) -> int:
        return self.coords[i]

    def key(self) -> tuple[int, ...]:
        return self.coords

    def to_json(self) -> list[int]:
        return list(self.coords)


@dataclass(frozen=True)
class AvoidSets:
    """Per-factor finite sets of forbidden coordinate values."""

    spec: GroupSpec
    omega: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.omega) != self.spec.m:
            raise ValidationError("avoid sets must have one set per factor")
        for s, n in zip(self.omega, self.spec.moduli):
            for v in s:
                if not isinstance(v, int):
                    raise ValidationError("avoid-set entries must be integers")
                if n and not 0 <= v < n:
                    raise ValidationError(
                        f"avoid-set entry {v} is not canonical for modulus {n}")

    @staticmethod
    def make(spec: GroupSpec, sets: Sequence[Iterable[int]]) -> "AvoidSets":
        if len(sets) != spec.m:
            raise ValidationError("avoid sets must have one set per factor")
        canon = tuple(
            frozenset(v % n if n else v for v in s)
            for s, n in zip(sets, spec.moduli))
        return AvoidSets(spec, canon)

    def allows(self, g: GroupElement) -> bool:
        """True iff g avoids every factor's forbidden set."""
        if g.spec != self.spec:
            raise ValidationError("element spec does not match avoid sets")
        return all(c not in s for c, s in zip(g.coords, self.omega))

    @property
    def max_size(self) -> int:
        return max((len(s) for s in self.omega), default=0)

    def to_json(self) -> list[list[int]]:
        return [sorted(s) for s in self.omega]

    @staticmethod
    def from_json(spec: GroupSpec, data) -> "AvoidSets":
        if not isinstance(data, list):
            raise ValidationError("omega must be a list of lists")
        return AvoidSets.make(spec, [list(s) for s in data])


# ---------------------------------------------------------------------------
# Integer lattice routines (exact, small scale)

def hnf_rows(rows: Sequence[Sequence[int]], ncols: int):
    """Row-style Hermite normal form with expression tracking.

    Returns (basis, exprs, kernel) where basis rows are in echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot),
    exprs[i] expresses basis[i] as an integer combination of the input rows,
    and kernel is a basis of the integer left-kernel of the input matrix.
    """
    k = len(rows)
    work = [list(r) + [1 if i == j else 0 for j in range(k)]
            for i, r in enumerate(rows)]
    for r in rows:
        if len(r) != ncols:
            raise ValidationError("ragged lattice rows")
    basis = []
    pool = list(range(len(work)))
    for col in range(ncols):
        live = [i for i in pool if work[i][col] != 0]
        while len(live) > 1:
            live.sort(key=lambda i: (abs(work[i][col]), i))
            p = live[0]
            for i in live[1:]:
                q = work[i][col] // work[p][col]
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[p])]
            live = [i for i in live if work[i][col] != 0]
        if live:
            p = live[0]
            if work[p][col] < 0:
                work[p] = [-a for a in work[p]]
            basis.append(p)
            pool.remove(p)
    # reduce entries above pivots for a unique reduced form
    for bi in range(len(basis) - 1, -1, -1):
        row = work[basis[bi]]
        piv_col = next(c for c in range(ncols) if row[c] != 0)
        for bj in range(bi):
            other = work[basis[bj]]
            q = other[piv_col] // row[piv_col]
            if q:
                work[basis[bj]] = [a - q * b for a, b in zip(other, row)]
    out_basis = [tuple(work[i][:ncols]) for i in basis]
    out_exprs = [tuple(work[i][ncols:]) for i in basis]
    kernel = [tuple(work[i][ncols:]) for i in pool
              if all(v == 0 for v in work[i][:ncols])]
    return out_basis, out_exprs, kernel


def _reduce_vector(vec, basis, exprs=None):
    """Greedy canonical reduction of vec by an echelon basis.

    Returns (reduced, coeffs) where coeffs, if tracking, satisfies
    vec - reduced = sum coeffs_i * input_row_i.
    """
    v = list(vec)
    ncols = len(v)
    acc = [0] * (len(exprs[0]) if exprs else 0)
    for i, row in enumerate(basis):
        piv_col = next(c for c in range(ncols) if row[c] != 0)
        q = v[piv_col] // row[piv_col]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
            if exprs:
                acc = [a + q * e for a, e in zip(acc, exprs[i])]
    return tuple(v), tuple(acc)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup handle: generators plus the HNF of their relation lattice."""

    spec: GroupSpec
    generators: tuple[GroupElement, ...]
    _basis: tuple[tuple[int, ...], ...]
    _exprs: tuple[tuple[int, ...], ...]

    def contains(self, g: GroupElement) -> bool:
        return self.reduce(g).is_zero()

    def reduce(self, g: GroupElement) -> GroupElement:
        """Canonical coset representative of g modulo this subgroup."""
        if g.spec != self.spec:
            raise ValidationError("element spec does not match subgroup")
        if not self._basis:
            return g
        red, _ = _reduce_vector(g.coords, self._basis)
        return GroupElement(self.spec, red)

    def express(self, g: GroupElement) -> Optional[tuple[int, ...]]:
        """Integer coefficients over the generators with sum = g, or None."""
        if g.spec != self.spec:
            raise ValidationError("element spec does not match subgroup")
        if not self._basis:
            return (0,) * len(self.generators) if g.is_zero() else None
        red, acc = _reduce_vector(g.coords, self._basis, self._exprs)
        if any(red):
            return None
        # acc runs over generators followed by factor relation rows; relation
        # rows are zero in the group, so their coefficients are dropped.
        return acc[:len(self.generators)]

    def is_finite(self) -> bool:
        zcols = [i for i, n in enumerate(self.spec.moduli) if n == 0]
        return all(g.coords[i] == 0 for g in self.generators for i in zcols)

    def elements(self) -> list[GroupElement]:
        """Closure enumeration, canonical order (finite subgroups only)."""
        if not self.is_finite():
            raise ValidationError("cannot enumerate an infinite subgroup")
        seen = {self.spec.zero}
        frontier = [self.spec.zero]
        while frontier:
            nxt = []
            for h in frontier:
                for g in self.generators:
                    s = h + g
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return sorted(seen, key=lambda e: e.coords)

    def order(self) -> int:
        return len(self.elements())


def subgroup_generated(spec: GroupSpec, gens: Iterable[GroupElement]) -> Subgroup:
    """Subgroup of the product generated by gens.

    The lattice stacks the generators' coordinate vectors with the factor
    relations n_i * e_i; membership and coset reduction use its HNF.
    """
    gens = tuple(gens)
    for g in gens:
        if g.spec != spec:
            raise ValidationError("generator spec mismatch")
    rows = [list(g.coords) for g in gens]
    for i, n in enumerate(spec.moduli):
        if n:
            rel = [0] * spec.m
            rel[i] = n
            rows.append(rel)
    if not rows:
        return Subgroup(spec, gens, (), ())
    basis, exprs, _ = hnf_rows(rows, spec.m)
    return Subgroup(spec, gens, tuple(basis), tuple(exprs))


def quotient_reduce(g: GroupElement, sub: Subgroup) -> GroupElement:
    return sub.reduce(g)


def snf_with_transforms(rows: Sequence[Sequence[int]]):
    """Smith normal form D = U M V with unimodular U, V.

    Returns (diag, U, V) where diag is the list of diagonal entries of D
    (non-negative, each dividing the next among the nonzero ones).
    """
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    M = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    V = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_op(i, j, q):  # row_i -= q * row_j
        M[i] = [a - q * b for a, b in zip(M[i], M[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in M:
            r[i] -= q * r[j]
        for r in V:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(nr, nc):
        # find pivot: smallest nonzero entry in the remaining block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if M[i][j] != 0 and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, nr):
                q = M[i][t] // M[t][t]
                if M[i][t] - q * M[t][t] != 0:
                    row_op(i, t, q)
                    swap_rows(t, i)
                    dirty = True
                elif q:
                    row_op(i, t, q)
            for j in range(t + 1, nc):
                q = M[t][j] // M[t][t]
                if M[t][j] - q * M[t][t] != 0:
                    col_op(j, t, q)
                    swap_cols(t, j)
                    dirty = True
                elif q:
                    col_op(j, t, q)
        # enforce divisibility d_t | entries below-right
        fixed = False
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if M[i][j] % M[t][t] != 0:
                    # add row i to row t, restart elimination at t
                    M[t] = [a + b for a, b in zip(M[t], M[i])]
                    U[t] = [a + b for a, b in zip(U[t], U[i])]
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        if M[t][t] < 0:
            M[t] = [-a for a in M[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    diag = [M[i][i] for i in range(min(nr, nc))]
    return diag, U, V


def _mat_vec(vec, mat):
    """Row vector times matrix."""
    nc = len(mat[0]) if mat else 0
    return tuple(sum(vec[i] * mat[i][j] for i in range(len(vec))) for j in range(nc))


@dataclass(frozen=True)
class SubgroupDecomposition:
    """Isomorphism from a finitely generated subgroup onto a normal form."""

    source_spec: GroupSpec
    subgroup: Subgroup
    normal_spec: GroupSpec
    _V: tuple[tuple[int, ...], ...]
    _kept: tuple[tuple[int, int], ...]  # (coordinate index in Z^s, modulus)

    def apply(self, g: GroupElement) -> GroupElement:
        """Image of g under the isomorphism; g must lie in the subgroup."""
        x = self.subgroup.express(g)
        if x is None:
            raise ValidationError("element not in the decomposed subgroup")
        y = _mat_vec(x, [list(r) for r in self._V])
        coords = tuple(y[i] for i, _ in self._kept)
        return self.normal_spec.element(coords)


def decompose_subgroup(spec: GroupSpec, gens: Sequence[GroupElement]) -> SubgroupDecomposition:
    """Normal form of the subgroup generated by gens, via Smith reduction.

    Presents the subgroup as Z^s modulo the integer kernel of
    x -> sum x_i g_i and diagonalizes that kernel.
    """
    gens = tuple(gens)
    sub = subgroup_generated(spec, gens)
    s = len(gens)
    if s == 0:
        return SubgroupDecomposition(spec, sub, GroupSpec(()), (), ())
    # kernel of Z^s -> Gamma: stack generator rows with relation rows and
    # take left-kernel expressions restricted to the generator block.
    rows = [list(g.coords) for g in gens]
    rel_count = 0
    for i, n in enumerate(spec.moduli):
        if n:
            rel = [0] * spec.m
            rel[i] = n
            rows.append(rel)
            rel_count += 1
    _, _, kernel = hnf_rows(rows, spec.m)
    kproj = [k[:s] for k in kernel]
    # drop zero rows of the projection
    kproj = [r for r in kproj if any(r)]
    if not kproj:
        diag, V = [], [[1 if i == j else 0 for j in range(s)] for i in range(s)]
    else:
        diag, _, V = snf_with_transforms(kproj)
    rank = sum(1 for d in diag if d != 0)
    kept = []
    moduli = []
    for i in range(s):
        d = diag[i] if i < rank else 0
        if d == 1:
            continue
        kept.append((i, d))
        moduli.append(d)
    normal = GroupSpec(tuple(moduli))
    return SubgroupDecomposition(spec, sub, normal, tuple(tuple(r) for r in V), tuple(kept))


# ---------------------------------------------------------------------------
# Subset sums and good sequences

def subset_sums(
    seq: Sequence[GroupElement],
    max_len: int = SUBSET_SUM_MAX_LEN,
    spec: GroupSpec | None = None,
) -> set[GroupElement]:
    """All sums over subsets of seq, the empty sum 0 included.

    An empty sequence needs an explicit spec to know which zero to return.
    """
    seq = list(seq)
    if len(seq) > max_len:
        raise BoundExceeded(f"subset sums limited to length {max_len}, got {len(seq)}")
    if not seq:
        if spec is None:
            raise ValidationError("empty sequence needs an explicit spec")
        return {spec.zero}
    sums: set[GroupElement] = {seq[0].spec.zero}
    for g in seq:
        sums = sums | {s + g for s in sums}
    return sums


def is_good_sequence(seq: Sequence[GroupElement], max_len: int = SUBSET_SUM_MAX_LEN) -> bool:
    """A sequence is good when it has at least |seq| distinct subset sums."""
    return len(subset_sums(seq, max_len)) >= len(seq)


def verify_small_good_sequences(max_order: int = 8, max_len: int = 5) -> dict:
    """Sweep: sequences whose repeated entries all have order >= the length are good.

    Exhausts every abelian group of order <= max_order (explicit factor
    tables) and every sequence of length <= max_len over it.
    """
    tables = {
        1: [()],
        2: [(2,)],
        3: [(3,)],
        4: [(4,), (2, 2)],
        5: [(5,)],
        6: [(6,)],
        7: [(7,)],
        8: [(8,), (4, 2), (2, 2, 2)],
    }
    if max_order > 8:
        raise BoundExceeded("small-good-sequence sweep tabulated up to order 8")
    checked = 0
    skipped = 0
    violations = []
    for order in range(1, max_order + 1):
        for moduli in tables[order]:
            spec = GroupSpec(moduli)
            elems = list(spec.elements())
            for t in range(1, max_len + 1):
                for seq in iproduct(elems, repeat=t):
                    counts: dict[GroupElement, int] = {}
                    for g in seq:
                        counts[g] = counts.get(g, 0) + 1
                    if any(c > 1 and g.order() < t for g, c in counts.items()):
                        skipped += 1
                        continue
                    checked += 1
                    if not is_good_sequence(seq):
                        violations.append([g.coords for g in seq])
    return {"checked": checked, "skipped": skipped, "violations": violations}


# ---------------------------------------------------------------------------
# Arithmetic progressions

@dataclass(frozen=True)
class ArithmeticProgression:
    """The set {offset + stride * n : n in Z} with stride >= 1."""

    offset: int
    stride: int

    def __post_init__(self):
        if self.stride < 1:
            raise ValidationError("progression stride must be >= 1")

    def contains(self, x: int) -> bool:
        return (x - self.offset) % self.stride == 0


def ap_covers_all(progs: Sequence[ArithmeticProgression]) -> bool:
    """True iff the union of the progressions is all of Z."""
    if not progs:
        return False
    L = math.lcm(*(p.stride for p in progs))
    return all(any(p.contains(x) for p in progs) for x in range(L))


def ap_covers_range(progs: Sequence[ArithmeticProgression], start: int, length: int) -> bool:
    return all(any(p.contains(x) for p in progs) for x in range(start, start + length))


def verify_ap_theorem(k: int, max_stride: int, window: Optional[int] = None) -> dict:
    """Exhaustive check: k progressions covering 2^k consecutive integers cover Z.

    With window < 2^k the sweep is expected to find counterexamples (the
    threshold is tight).  Returns families_checked plus the counterexample
    list: families covering some window of the given length but not Z.
    """
    if k < 1 or k > AP_MAX_K:
        raise BoundExceeded(f"ap-theorem sweep limited to k <= {AP_MAX_K}")
    if max_stride < 1 or max_stride > AP_MAX_STRIDE:
        raise BoundExceeded(f"ap-theorem sweep limited to strides <= {AP_MAX_STRIDE}")
    if window is None:
        window = 2 ** k
    progs = [ArithmeticProgression(a, b)
             for b in range(1, max_stride + 1) for a in range(b)]
    counterexamples = []
    families = 0
    from itertools import combinations_with_replacement
    for fam in combinations_with_replacement(progs, k):
        families += 1
        L = math.lcm(*(p.stride for p in fam))
        covered_window = None
        for s in range(L):
            if ap_covers_range(fam, s, window):
                covered_window = s
                break
        if covered_window is None:
            continue
        if not ap_covers_all(fam):
            counterexamples.append({
                "family": [(p.offset, p.stride) for p in fam],
                "window_start": covered_window,
            })
    return {"k": k, "max_stride": max_stride, "window": window,
            "families_checked": families, "counterexamples": counterexamples}


# ---------------------------------------------------------------------------
# Selection lemmas

def omega_avoiding_coefficients(elements: Sequence[GroupElement],
                                avoid: AvoidSets,
                                witness: Sequence[int]) -> tuple[int, ...]:
    """Bounded positive coefficients with an avoiding combination.

    Given that some integer combination of the elements avoids every factor
    set (the witness), finds coefficients d with 1 <= d_i <= 2^(m*omega)
    whose combination also avoids.  First hit in lexicographic order.
    """
    elements = list(elements)
    spec = avoid.spec
    for g in elements:
        if g.spec != spec:
            raise ValidationError("element spec does not match avoid sets")
    t = len(elements)
    if t == 0:
        raise ValidationError("need at least one element")
    if len(witness) != t:
        raise ValidationError("witness length mismatch")
    wsum = spec.zero
    for c, g in zip(witness, elements):
        wsum = wsum + g.scale(c)
    if not avoid.allows(wsum):
        raise ValidationError("witness combination does not avoid the forbidden sets")
    bound = 2 ** (spec.m * avoid.max_size)
    if bound ** t > CHOICE_SPACE_BOUND:
        raise BoundExceeded(
            f"coefficient box {bound}^{t} exceeds the search bound")
    for d in iproduct(range(1, bound + 1), repeat=t):
        s = spec.zero
        for c, g in zip(d, elements):
            s = s + g.scale(c)
        if avoid.allows(s):
            return d
    raise PropertyViolation(
        "omega-avoiding-coefficients",
        f"no coefficient vector in [1..{bound}]^{t} avoids, though a witness exists")


def vector_sum_select(sets: Sequence[Sequence[GroupElement]],
                      avoid: AvoidSets,
                      h: GroupElement) -> tuple[GroupElement, ...]:
    """One element per set whose total, shifted by h, avoids every factor set.

    Requires each set larger than m*omega and, per factor, some set whose
    projection to that factor is injective.
    """
    spec = avoid.spec
    if h.spec != spec:
        raise ValidationError("h spec mismatch")
    m, w = spec.m, avoid.max_size
    sets = [sorted(s, key=lambda g: g.coords) for s in sets]
    for s in sets:
        if len(s) <= m * w:
            raise ValidationError(
                f"each set must have more than m*omega = {m * w} elements")
        for g in s:
            if g.spec != spec:
                raise ValidationError("set element spec mismatch")
    for i in range(m):
        if not any(len({g.coords[i] for g in s}) == len(s) for s in sets):
            raise ValidationError(f"no set is injective on factor {i}")
    size = 1
    for s in sets:
        size *= len(s)
    if size > CHOICE_SPACE_BOUND:
        raise BoundExceeded("vector-sum choice space exceeds the search bound")
    for choice in iproduct(*sets):
        s = h
        for g in choice:
            s = s + g
        if avoid.allows(s):
            return tuple(choice)
    raise PropertyViolation("vector-sum-select", "no avoiding choice exists")


def good_pair_select(a_seqs: Sequence[Sequence[GroupElement]],
                     b_seqs: Sequence[Sequence[GroupElement]],
                     avoid: AvoidSets,
                     h: GroupElement) -> tuple[tuple[GroupElement, ...], ...]:
    """Pick a or b entry-wise so the total, shifted by h, avoids every factor.

    One sequence pair per factor; pair i must differ by a per-factor-i good
    sequence of length at least m*omega + 1.  Choices are searched with the
    b entry preferred, so an empty avoid system returns the all-b matrix.
    """
    spec = avoid.spec
    m, w = spec.m, avoid.max_size
    if len(a_seqs) != m or len(b_seqs) != m:
        raise ValidationError("need one sequence pair per factor")
    if h.spec != spec:
        raise ValidationError("h spec mismatch")
    total_cells = 0
    for i in range(m):
        if len(a_seqs[i]) != len(b_seqs[i]):
            raise ValidationError("paired sequences must have equal length")
        if len(a_seqs[i]) < m * w + 1:
            raise ValidationError(
                f"sequences must have length >= m*omega+1 = {m * w + 1}")
        diff = [a - b for a, b in zip(a_seqs[i], b_seqs[i])]
        proj_spec = GroupSpec((spec.moduli[i],))
        proj = [proj_spec.element((d.coords[i],)) for d in diff]
        if not is_good_sequence(proj):
            raise ValidationError(f"difference sequence for factor {i} is not good")
        total_cells += len(a_seqs[i])
    if 2 ** total_cells > CHOICE_SPACE_BOUND:
        raise BoundExceeded("good-pair choice space exceeds the search bound")
    cells = [(i, j) for i in range(m) for j in range(len(a_seqs[i]))]
    for mask in iproduct((0, 1), repeat=total_cells):
        s = h
        for (i, j), bit in zip(cells, mask):
            s = s + (a_seqs[i][j] if bit else b_seqs[i][j])
        if avoid.allows(s):
            out: list[list[GroupElement]] = [[] for _ in range(m)]
            for (i, j), bit in zip(cells, mask):
                out[i].append(a_seqs[i][j] if bit else b_seqs[i][j])
            return tuple(tuple(row) for row in out)
    raise PropertyViolation("good-pair-select", "no avoiding choice exists")


def ramsey_homogeneous_subset(seq: Sequence[GroupElement], t: int,
                              z_factors: Sequence[int] = (),
                              max_len: int = RAMSEY_MAX_LEN):
    """First t-subset on which every factor is constant or injective.

    Returns (indices, flags) with flags[i] in {"equal", "distinct"}, or None
    when no such subset exists (the sequence is below the Ramsey threshold;
    not an error).  If every pair of entries differs on some factor in
    z_factors, at least one z-factor comes out flagged distinct.
    """
    seq = list(seq)
    if len(seq) > max_len:
        raise BoundExceeded(f"ramsey search limited to length {max_len}")
    if t < 1:
        raise ValidationError("subset size must be >= 1")
    if not seq:
        return None
    spec = seq[0].spec
    for g in seq:
        if g.spec != spec:
            raise ValidationError("mixed element specs")
    for i in z_factors:
        if not 0 <= i < spec.m:
            raise ValidationError(f"factor index {i} out of range")
    for idx in combinations(range(len(seq)), t):
        flags = []
        ok = True
        for f in range(spec.m):
            vals = [seq[i].coords[f] for i in idx]
            if len(set(vals)) == 1:
                flags.append("equal")
            elif len(set(vals)) == len(vals):
                flags.append("distinct")
            else:
                ok = False
                break
        if ok:
            return idx, tuple(flags)
    return None

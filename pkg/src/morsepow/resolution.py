"""Assemble the minimal free resolution of I**r and its invariants.

The chain complex has one basis element per critical cell, labeled by
the cell's lcm monomial; differentials carry (integer coefficient,
monomial shift) entries.  Because every entry's shift is forced by the
row and column labels, well-formedness and strand acyclicity reduce to
exact integer linear algebra, done over the rationals or a prime field.
No floating point is used anywhere.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .matching import TaylorMatching
from .monomials import ONE, Monomial, Variables, divides, format_monomial, lcm
from .morse import CriticalCell, MorseComplex
from .ordering import OrderedGenerators, order_generators
from .powers import PowerBasis, support


@dataclass
class ChainComplex:
    """Bases and differentials of the resolution of I**r.

    ``basis[i]`` lists the degree-i critical cells, ``labels[i]`` their
    lcm monomials, and ``maps[i]`` (for i >= 1) the sparse differential
    from degree i to degree i-1 as {(row, col): (coefficient, shift)}.
    """

    og: OrderedGenerators
    r: int
    basis: list[list[CriticalCell]]
    labels: list[list[Monomial]]
    maps: dict[int, dict[tuple[int, int], tuple[int, Monomial]]]

    @property
    def variables(self) -> Variables:
        return self.og.variables

    @property
    def length(self) -> int:
        return len(self.basis) - 1

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.basis)


def build_resolution(
    generators,
    r: int,
    variables: Variables | None = None,
    joints_override=None,
    og: OrderedGenerators | None = None,
) -> ChainComplex:
    """Build the minimal free resolution of I**r for an ideal of
    projective dimension at most one.

    ``generators`` may be monomials (with ``variables``) or an already
    ordered structure can be passed via ``og``.  Raises
    NotProjectiveDimensionOne when the ideal does not qualify.
    """
    if r < 1:
        raise ValueError("the power r must be at least 1")
    if og is None:
        og = order_generators(generators, variables, joints_override)
    morse = MorseComplex(TaylorMatching(PowerBasis(og, r)))
    basis = morse.critical_cells()
    labels = [[morse.cell_lcm(c) for c in cells] for cells in basis]
    maps: dict[int, dict[tuple[int, int], tuple[int, Monomial]]] = {}
    for i in range(1, len(basis)):
        index = {cell: row for row, cell in enumerate(basis[i - 1])}
        entries: dict[tuple[int, int], tuple[int, Monomial]] = {}
        for col, cell in enumerate(basis[i]):
            for sub, coeff, shift in morse.differential(cell):
                entries[(index[sub], col)] = (coeff, shift)
        maps[i] = entries
    return ChainComplex(og, r, basis, labels, maps)


@dataclass
class BettiTable:
    """Total and multigraded Betti numbers of the resolution."""

    totals: tuple[int, ...]
    multigraded: dict[tuple[int, Monomial], int]
    variables: Variables = field(repr=False)

    def to_json(self) -> dict:
        return {
            "total": list(self.totals),
            "multigraded": [
                {"i": i, "m": format_monomial(m, self.variables), "count": c}
                for (i, m), c in sorted(self.multigraded.items())
            ],
        }

    def render(self) -> str:
        """Text grid in the usual Betti-table layout: column i, row j-i
        where j is the total degree of the label."""
        if not self.totals:
            return "(empty)"
        width = len(self.totals)
        rows: dict[int, list[int]] = {}
        for (i, m), c in self.multigraded.items():
            rows.setdefault(m.degree - i, [0] * width)[i] += c
        lo, hi = min(rows), max(rows)
        cols = [max(4, len(str(t)) + 1) for t in self.totals]
        head = "      " + "".join(f"{i:>{cols[i]}}" for i in range(width))
        total = "total:" + "".join(f"{t:>{cols[i]}}" for i, t in enumerate(self.totals))
        lines = [head, total]
        for d in range(lo, hi + 1):
            row = rows.get(d, [0] * width)
            cells = "".join(
                f"{str(c) if c else '.':>{cols[i]}}" for i, c in enumerate(row)
            )
            lines.append(f"{d:>5}:" + cells)
        return "\n".join(lines)


def betti(complex: ChainComplex) -> BettiTable:
    multigraded: dict[tuple[int, Monomial], int] = {}
    for i, labels in enumerate(complex.labels):
        for m in labels:
            key = (i, m)
            multigraded[key] = multigraded.get(key, 0) + 1
    return BettiTable(complex.ranks(), multigraded, complex.variables)


def betti_closed_form(q: int, r: int) -> tuple[int, ...]:
    """Rank in degree i as a sum of binomials over the weight-r vectors:
    choose i of each vector's support slots beyond the first."""
    from .powers import weak_compositions

    counts: list[int] = []
    for a in weak_compositions(r, q):
        s = len(support(a) - {0})
        while len(counts) <= s:
            counts.append(0)
        for i in range(s + 1):
            counts[i] += comb(s, i)
    return tuple(counts)


def pd_formula(q: int, r: int) -> int:
    """Projective dimension of I**r: q-1 once r reaches q-1, else r."""
    if q < 1 or r < 1:
        raise ValueError("need q >= 1 and r >= 1")
    return q - 1 if r >= q - 1 else r


def pd_computed(complex: ChainComplex) -> int:
    """Largest homological degree with a nonzero free module."""
    top = 0
    for i, cells in enumerate(complex.basis):
        if cells:
            top = i
    return top


def dstab(q: int) -> int:
    """The power at which the projective dimensions (equivalently the
    depths) of I**r stabilize."""
    if q < 1:
        raise ValueError("need q >= 1")
    return max(q - 1, 0) if q > 1 else 0


def pd_sequence(q: int, up_to: int | None = None) -> tuple[int, ...]:
    up_to = q if up_to is None else up_to
    return tuple(pd_formula(q, r) for r in range(1, up_to + 1))


# ----------------------------------------------------------------------
# verification oracles


def verify_minimality(complex: ChainComplex) -> bool:
    """Every differential shift is a non-unit monomial, and no attached
    cell one dimension down shares its label with the cell above."""
    for entries in complex.maps.values():
        for _, shift in entries.values():
            if shift.is_one():
                return False
    morse = MorseComplex(TaylorMatching(PowerBasis(complex.og, complex.r)))
    for cells in complex.basis[1:]:
        for cell in cells:
            label = morse.cell_lcm(cell)
            for sub in morse.closure_facets(cell):
                if morse.cell_lcm(sub) == label:
                    return False
    return True


def verify_d2(complex: ChainComplex) -> bool:
    """Consecutive differentials compose to zero.

    Shifts are determined by the row/column labels, so the symbolic
    composition vanishes exactly when the integer coefficient matrices
    multiply to zero.
    """
    for i in range(2, complex.length + 1):
        lower = complex.maps[i - 1]
        upper = complex.maps[i]
        by_col: dict[int, list[tuple[int, int]]] = {}
        for (row, col), (c, _) in upper.items():
            by_col.setdefault(col, []).append((row, c))
        by_mid: dict[int, list[tuple[int, int]]] = {}
        for (row, mid), (c, _) in lower.items():
            by_mid.setdefault(mid, []).append((row, c))
        for col, mids in by_col.items():
            acc: dict[int, int] = {}
            for mid, c1 in mids:
                for row, c2 in by_mid.get(mid, ()):
                    acc[row] = acc.get(row, 0) + c1 * c2
            if any(v != 0 for v in acc.values()):
                return False
    return True


def _rank(rows, char: int) -> int:
    """Rank of a dense integer matrix over Q (char 0) or GF(char)."""
    if not rows or not rows[0]:
        return 0
    if char == 0:
        mat = [[Fraction(x) for x in row] for row in rows]
    else:
        mat = [[x % char for x in row] for row in rows]
    m, n = len(mat), len(mat[0])
    rank = 0
    row = 0
    for col in range(n):
        pivot = next((i for i in range(row, m) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = (
            1 / mat[row][col]
            if char == 0
            else pow(int(mat[row][col]), -1, char)
        )
        if char == 0:
            mat[row] = [x * inv for x in mat[row]]
        else:
            mat[row] = [(x * inv) % char for x in mat[row]]
        for i in range(m):
            if i != row and mat[i][col] != 0:
                f = mat[i][col]
                if char == 0:
                    mat[i] = [x - f * y for x, y in zip(mat[i], mat[row])]
                else:
                    mat[i] = [(x - f * y) % char for x, y in zip(mat[i], mat[row])]
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def strand_degrees(complex: ChainComplex) -> list[Monomial]:
    """All labels of the resolution, closed under pairwise lcm: the
    multidegrees where the label subcomplex can change."""
    degrees = {m for labels in complex.labels for m in labels}
    frontier = set(degrees)
    while frontier:
        new = set()
        for m in frontier:
            for m2 in degrees:
                j = lcm(m, m2)
                if j not in degrees and j not in new:
                    new.add(j)
        degrees |= new
        frontier = new
    return sorted(degrees)


def taylor_betti(generators, char: int = 0) -> dict[tuple[int, Monomial], int]:
    """Multigraded Betti numbers of any minimally generated monomial
    ideal, computed classically: the Betti number in degree (i, m) is
    the reduced homology rank, one dimension down, of the subcomplex of
    Taylor faces whose label strictly divides m.

    Exponential in the number of generators and fully independent of the
    matching machinery; a desk-scale oracle for cross-checking the Morse
    resolution (and for measuring pd of ideals outside its scope).
    """
    gens = list(generators)
    q = len(gens)
    faces: list[tuple[int, ...]] = [()]
    labels: dict[tuple[int, ...], Monomial] = {(): ONE}
    for k in range(1, q + 1):
        for sub in combinations(range(q), k):
            faces.append(sub)
            labels[sub] = lcm(labels[sub[:-1]], gens[sub[-1]])
    out: dict[tuple[int, Monomial], int] = {}
    for m in sorted(set(labels.values()) - {ONE}):
        by_dim: dict[int, list[tuple[int, ...]]] = {}
        for sub in faces:
            lab = labels[sub]
            if lab != m and divides(lab, m):
                by_dim.setdefault(len(sub) - 1, []).append(sub)
        top = max(by_dim)
        mats = {}
        for d in range(0, top + 1):
            rows = {f: i for i, f in enumerate(by_dim.get(d - 1, []))}
            cols = by_dim.get(d, [])
            mat = [[0] * len(cols) for _ in range(len(rows))]
            for c, f in enumerate(cols):
                for p in range(len(f)):
                    facet = f[:p] + f[p + 1 :]
                    assert facet in rows  # its label divides f's label
                    mat[rows[facet]][c] = -1 if p % 2 else 1
            mats[d] = mat
        for i in range(0, top + 2):
            d = i - 1  # homological degree i reads face dimension i-1
            n = len(by_dim.get(d, []))
            if n == 0:
                continue
            rank_down = _rank(mats[d], char) if d >= 0 else 0
            rank_up = _rank(mats[d + 1], char) if d + 1 in mats else 0
            h = n - rank_down - rank_up
            if h:
                out[(i, m)] = h
    return out


def _strand_is_acyclic(complex: ChainComplex, degree: Monomial, char: int) -> bool:
    """Reduced homology of the subcomplex of cells whose label divides
    the given degree, with the empty cell adjoined, must vanish."""
    keep = [
        [j for j, m in enumerate(labels) if divides(m, degree)]
        for labels in complex.labels
    ]
    dims = [len(k) for k in keep]
    # boundary matrices of the selected cells, degree i -> i-1
    mats = []
    for i in range(1, len(keep)):
        rows = {j: t for t, j in enumerate(keep[i - 1])}
        by_col: dict[int, list[tuple[int, int]]] = {}
        for (row, col), (c, _) in complex.maps[i].items():
            by_col.setdefault(col, []).append((row, c))
        mat = [[0] * dims[i] for _ in range(dims[i - 1])]
        for colpos, j in enumerate(keep[i]):
            for row, c in by_col.get(j, ()):
                if row in rows:
                    mat[rows[row]][colpos] = c
        mats.append(mat)
    # augmentation: every vertex maps to the empty cell with coefficient 1
    aug = [[1] * dims[0]]
    chain = [aug] + mats
    # the restriction must still be a complex
    for i in range(1, len(chain)):
        lo, hi = chain[i - 1], chain[i]
        for col in range(dims[i]):
            for row in range(len(lo)):
                if sum(lo[row][k] * hi[k][col] for k in range(dims[i - 1])) != 0:
                    return False
    ranks = [_rank(m, char) for m in chain]
    # reduced homology in degree i: dim ker d_i - rank d_{i+1}
    if dims[0] == 0:
        return False  # the empty degree supports no acyclic augmented complex
    for i in range(len(dims)):
        kernel = dims[i] - ranks[i]
        image = ranks[i + 1] if i + 1 < len(chain) else 0
        if kernel - image != 0:
            return False
    # degree -1: the augmentation must be onto
    return ranks[0] == 1


def verify_strand_acyclicity(
    complex: ChainComplex, field_char: int = 0, threads: int | None = None
) -> bool:
    """Check every multidegree strand of the resolution is exact by
    computing reduced homology of label subcomplexes over the chosen
    field (0 means the rationals, otherwise a prime)."""
    if field_char != 0 and field_char < 2:
        raise ValueError("field characteristic must be 0 or a prime")
    degrees = strand_degrees(complex)
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(
                lambda m: _strand_is_acyclic(complex, m, field_char), degrees
            )
            return all(results)
    return all(_strand_is_acyclic(complex, m, field_char) for m in degrees)

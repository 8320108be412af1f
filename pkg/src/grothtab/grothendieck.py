"""Schur and Grothendieck polynomials, four independent ways.

Tableau generating sums (driven by the enumerators), determinant quotients
with exact Vandermonde division, the refined multi-parameter determinant,
and the shifted-exponent expansion that evaluates the refined quotient at
the geometric point x = (1, q, ..., q^(n-1)) without any determinant.
Keeping the routes separate is the point: the verification harness compares
them against each other.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .arith import binomial
from .partitions import Partition
from .polynomials import Poly, determinant
from .tableaux import enumerate_sst, enumerate_svt

BETA = "b"


def _x_names(nvars: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, nvars + 1))


def _scalar_or_var(value):
    if isinstance(value, str):
        return Poly.variable(value)
    return Fraction(value)


def schur_tableau_sum(shape, nvars: int) -> Poly:
    """Sum of x^weight over all semistandard fillings; symmetric in the x's.

    Zero polynomial when the shape has more rows than variables.
    """
    return _schur_cached(Partition(shape), int(nvars))


@lru_cache(maxsize=None)
def _schur_cached(shape: Partition, nvars: int) -> Poly:
    names = _x_names(nvars)
    terms: dict[tuple[int, ...], Fraction] = {}
    for tableau in enumerate_sst(shape, nvars):
        counts = [0] * nvars
        for row in tableau.rows:
            for cell in row:
                counts[cell[0] - 1] += 1
        key = tuple(counts)
        terms[key] = terms.get(key, 0) + 1
    return Poly(names, terms)


def grothendieck_tableau_sum(shape, nvars: int) -> Poly:
    """Sum of b^excess x^weight over all set-valued fillings.

    The coefficient of b^0 is the Schur polynomial of the same shape.
    """
    return _grothendieck_cached(Partition(shape), int(nvars))


@lru_cache(maxsize=None)
def _grothendieck_cached(shape: Partition, nvars: int) -> Poly:
    names = tuple([BETA, *_x_names(nvars)])
    boxes = shape.size
    terms: dict[tuple[int, ...], Fraction] = {}
    for tableau in enumerate_svt(shape, nvars):
        counts = [0] * nvars
        letters = 0
        for row in tableau.rows:
            for cell in row:
                letters += len(cell)
                for v in cell:
                    counts[v - 1] += 1
        key = (letters - boxes, *counts)
        terms[key] = terms.get(key, 0) + 1
    return Poly(names, terms)


def _divide_vandermonde(det: Poly, nvars: int) -> Poly:
    """Exact division by prod_{i<j} (x_i - x_j), one factor at a time."""
    out = det
    for i in range(1, nvars):
        for j in range(i + 1, nvars + 1):
            out = out.divide_by_difference(f"x{i}", f"x{j}")
    return out


def grothendieck_bialternant(shape, nvars: int, beta=BETA) -> Poly:
    """Determinant quotient det[x_i^(l_j + n - j) (1 + beta x_i)^(j-1)] / V.

    The shape is zero-padded to n parts; beta may be a rational or a
    variable name.  Division by the Vandermonde is exact by construction,
    and a nonzero remainder raises (it would mean a real bug).
    """
    shape = Partition(shape)
    n = int(nvars)
    if len(shape) > n:
        return Poly.constant(0)
    lam = shape.padded(n)
    xs = [Poly.variable(name) for name in _x_names(n)]
    bval = _scalar_or_var(beta)
    rows = []
    for i in range(n):
        factor = 1 + bval * xs[i]
        row = [xs[i] ** (lam[j] + n - 1 - j) * factor ** j for j in range(n)]
        rows.append(row)
    return _divide_vandermonde(determinant(rows), n)


def refined_bialternant(shape, nvars: int, betas) -> Poly:
    """Multi-parameter determinant quotient: column j carries the product
    (1 + beta_1 x_i) ... (1 + beta_(j-1) x_i).

    Exactly n-1 beta values (rationals or variable names) are required.
    Setting all of them equal recovers grothendieck_bialternant; setting
    them to zero recovers the Schur polynomial.
    """
    shape = Partition(shape)
    n = int(nvars)
    if len(betas) != n - 1:
        raise ValueError(f"need exactly {n - 1} beta values, got {len(betas)}")
    if len(shape) > n:
        return Poly.constant(0)
    lam = shape.padded(n)
    xs = [Poly.variable(name) for name in _x_names(n)]
    bvals = [_scalar_or_var(b) for b in betas]
    rows = []
    for i in range(n):
        row = []
        entry_factor = Poly.constant(1)
        for j in range(n):
            if j > 0:
                entry_factor = entry_factor * (1 + bvals[j - 1] * xs[i])
            row.append(xs[i] ** (lam[j] + n - 1 - j) * entry_factor)
        rows.append(row)
    return _divide_vandermonde(determinant(rows), n)


def elementary_symmetric(k: int, values):
    """e_k of the given values (rationals or polynomials); e_0 = 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    values = list(values)
    if k > len(values):
        return Fraction(0)
    table = [Fraction(1)] + [Fraction(0)] * k
    for v in values:
        for t in range(k, 0, -1):
            table[t] = table[t] + v * table[t - 1]
    return table[k]


def elementary_symmetric_poly(k: int, nvars: int) -> Poly:
    """e_k(x_1 .. x_n) as a polynomial."""
    names = _x_names(nvars)
    if k < 0 or k > nvars:
        return Poly(names, {})
    terms = {}
    for combo in combinations(range(nvars), k):
        exps = [0] * nvars
        for i in combo:
            exps[i] = 1
        terms[tuple(exps)] = Fraction(1)
    return Poly(names, terms)


def principal_specialization_q(shape, nvars: int, betas, q):
    """Value at x = (1, q, ..., q^(n-1)) of the refined quotient, computed
    by the shifted-exponent expansion instead of a determinant:

        sum over k_j in 0..j-1 of
            prod_j e_{k_j}(beta_1 .. beta_(j-1))
            * prod_{i<j} (q^(l_j+n-j+k_j) - q^(l_i+n-i+k_i))
                       / (q^(n-j) - q^(n-i))

    betas are rationals or variable names (exactly n-1 of them); q is a
    rational or a variable name.  A rational q must be nonzero and keep
    every denominator factor nonzero (q = 1, and other small roots of
    unity, are rejected by that check).  Returns a Fraction when all inputs
    are rational, otherwise a Poly; for symbolic q the division is exact
    polynomial division and is asserted to have zero remainder.
    """
    shape = Partition(shape)
    n = int(nvars)
    if len(betas) != n - 1:
        raise ValueError(f"need exactly {n - 1} beta values, got {len(betas)}")
    if len(shape) > n:
        return Fraction(0)
    lam = shape.padded(n)
    bvals = [_scalar_or_var(b) for b in betas]
    symbolic_q = isinstance(q, str)
    qval = Poly.variable(q) if symbolic_q else Fraction(q)
    if not symbolic_q and qval == 0:
        raise ValueError("q must be nonzero")

    powers: dict[int, object] = {}

    def qp(e: int):
        if e not in powers:
            powers[e] = qval ** e
        return powers[e]

    etable = [[elementary_symmetric(k, bvals[:j]) for k in range(j + 1)] for j in range(n)]

    total = Fraction(0)
    for ks in product(*(range(j + 1) for j in range(n))):
        coeff = Fraction(1)
        for j, k in enumerate(ks):
            coeff = coeff * etable[j][k]
        if coeff == 0:
            continue
        alpha = [lam[j] + n - 1 - j + ks[j] for j in range(n)]
        term = coeff
        for i in range(n):
            for j in range(i + 1, n):
                term = term * (qp(alpha[j]) - qp(alpha[i]))
        total = total + term

    denom = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            denom = denom * (qp(n - j) - qp(n - i))

    if symbolic_q:
        return Poly._coerce(total).divide_exact(Poly._coerce(denom), q)
    if denom == 0:
        raise ValueError(f"q-Vandermonde vanishes at q = {q}")
    if isinstance(total, Poly):
        return total * (Fraction(1) / denom)
    return total / denom


def count_svt_formula(shape, nvars: int) -> int:
    """Number of set-valued tableaux by the nested binomial-shift sum:

        sum over k_j in 0..j-1 of prod_j C(j-1, k_j)
            * prod_{i<j} (l_i - l_j + k_i - k_j + j - i) / (j - i)

    The rational sum is asserted to be a non-negative integer.  Zero when
    the shape has more rows than variables.
    """
    shape = Partition(shape)
    n = int(nvars)
    if len(shape) > n:
        return 0
    lam = shape.padded(n)
    total = Fraction(0)
    for ks in product(*(range(j + 1) for j in range(n))):
        term = Fraction(1)
        for j, k in enumerate(ks):
            term *= binomial(j, k)
        for i in range(n):
            for j in range(i + 1, n):
                term *= Fraction(lam[i] - lam[j] + ks[i] - ks[j] + j - i, j - i)
        total += term
    assert total.denominator == 1 and total >= 0, f"formula gave {total} for {shape}, n={n}"
    return total.numerator


def single_column_e_expansion(k: int, nvars: int, beta=BETA) -> Poly:
    """The single-column polynomial expanded in elementary symmetric
    polynomials: sum_{m=0}^{n-k} C(m+k-1, m) beta^m e_{m+k}(x).

    The binomial coefficient C(m+k-1, m) is pinned by cross-checking the
    expansion against the tableau sum for all k, n <= 4 (see the regression
    tests); the plausible-looking alternative C(n+k-1, m) disagrees already
    at k = 1, n = 2.
    """
    if k < 1:
        raise ValueError("column height k must be >= 1")
    n = int(nvars)
    bval = _scalar_or_var(beta)
    total = Poly.constant(0)
    for m in range(0, n - k + 1):
        term = binomial(m + k - 1, m) * elementary_symmetric_poly(m + k, n)
        total = total + bval ** m * term
    return total

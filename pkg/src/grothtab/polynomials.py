"""Sparse multivariate polynomials over exact rationals.

Just enough ring machinery for the determinant formulas: arithmetic,
substitution, determinants of polynomial matrices, and two exact division
routines (synthetic division by a difference of two variables, and long
division by a univariate divisor).  Division raises on a nonzero remainder
instead of ever returning an approximation.

Polynomials are immutable values; every operation returns a fresh Poly.
"""

import re
from fractions import Fraction

from .arith import format_rational, parse_rational

_NAME_RE = re.compile(r"[A-Za-z]+[0-9]*\Z")


def _var_key(name: str):
    # 'x2' sorts before 'x10'; bare names sort before numbered ones
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    return (head, int(tail) if tail else -1)


def _union_vars(a, b):
    return tuple(sorted(set(a) | set(b), key=_var_key))


class Poly:
    """Polynomial as a map from exponent vectors to nonzero Fractions.

    The variable tuple is kept sorted in a canonical order, and operands
    with different variable sets are aligned automatically, so a polynomial
    in (x1, x2) compares equal to the same polynomial built over
    (b, x1, x2) with unused b.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        vars = tuple(vars)
        if list(vars) != sorted(set(vars), key=_var_key):
            raise ValueError(f"variables must be unique and sorted: {vars}")
        self.vars = vars
        self.terms = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                self.terms[tuple(exps)] = coeff

    @classmethod
    def constant(cls, value) -> "Poly":
        value = Fraction(value)
        return cls((), {(): value} if value else {})

    @classmethod
    def variable(cls, name: str) -> "Poly":
        if not _NAME_RE.match(name):
            raise ValueError(f"bad variable name: {name!r}")
        return cls((name,), {(1,): Fraction(1)})

    # -- alignment ---------------------------------------------------

    def _terms_over(self, vars):
        """self.terms re-indexed over the (super)set of variables `vars`."""
        if vars == self.vars:
            return self.terms
        pos = [vars.index(v) for v in self.vars]
        width = len(vars)
        out = {}
        for exps, coeff in self.terms.items():
            e = [0] * width
            for p, k in zip(pos, exps):
                e[p] = k
            out[tuple(e)] = coeff
        return out

    @staticmethod
    def _coerce(value) -> "Poly":
        if isinstance(value, Poly):
            return value
        return Poly.constant(value)

    # -- ring operations ---------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        vars = _union_vars(self.vars, other.vars)
        terms = dict(self._terms_over(vars))
        for exps, coeff in other._terms_over(vars).items():
            new = terms.get(exps, 0) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return Poly(vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return Poly(_union_vars(self.vars, other.vars), {})
        vars = _union_vars(self.vars, other.vars)
        left = self._terms_over(vars)
        right = other._terms_over(vars)
        if len(left) > len(right):
            left, right = right, left
        terms = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                else:
                    del terms[key]
        return Poly(vars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative int: {exponent}")
        result = Poly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        vars = _union_vars(self.vars, other.vars)
        return self._terms_over(vars) == other._terms_over(vars)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def as_fraction(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return next(iter(self.terms.values()))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in one variable; -1 for the zero poly."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coefficient(self, var: str, power: int) -> "Poly":
        """The coefficient of var**power, as a polynomial without var."""
        if var not in self.vars:
            return self if power == 0 else Poly(self.vars, {})
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[i] == power:
                terms[exps[:i] + exps[i + 1:]] = coeff
        return Poly(rest, terms)

    def substitute(self, values: dict) -> "Poly":
        """Evaluate some variables at rationals; names the polynomial does
        not use are ignored.  Returns a Poly in the remaining variables."""
        hit = [i for i, v in enumerate(self.vars) if v in values]
        if not hit:
            return self
        vals = {i: Fraction(values[self.vars[i]]) for i in hit}
        keep = [i for i in range(len(self.vars)) if i not in vals]
        rest = tuple(self.vars[i] for i in keep)
        terms = {}
        for exps, coeff in self.terms.items():
            for i, v in vals.items():
                coeff = coeff * v ** exps[i]
            if not coeff:
                continue
            key = tuple(exps[i] for i in keep)
            new = terms.get(key, 0) + coeff
            if new:
                terms[key] = new
            else:
                del terms[key]
        return Poly(rest, terms)

    def evaluate(self, values: dict) -> Fraction:
        """Full evaluation; every variable must receive a value."""
        return self.substitute(values).as_fraction()

    # -- exact division ----------------------------------------------

    def divide_by_difference(self, u: str, v: str) -> "Poly":
        """Exact division by (u - v) via synthetic division in u.

        The remainder is self with u := v; a nonzero remainder raises
        ValueError, which callers treat as a hard correctness failure.
        """
        if u == v:
            raise ValueError("divisor (u - v) must use two distinct variables")
        vars = _union_vars(self.vars, (u, v))
        ui = vars.index(u)
        vi = vars.index(v)
        by_deg: dict[int, dict] = {}
        for exps, coeff in self._terms_over(vars).items():
            k = exps[ui]
            e = list(exps)
            e[ui] = 0
            by_deg.setdefault(k, {})[tuple(e)] = coeff
        if not by_deg:
            return Poly(vars, {})

        def shifted_by_v(d):
            out = {}
            for exps, coeff in d.items():
                e = list(exps)
                e[vi] += 1
                out[tuple(e)] = coeff
            return out

        def accumulate(dst, src):
            for exps, coeff in src.items():
                new = dst.get(exps, 0) + coeff
                if new:
                    dst[exps] = new
                else:
                    dst.pop(exps, None)

        top = max(by_deg)
        carry: dict = {}
        quotient: dict = {}
        for k in range(top, 0, -1):
            step = shifted_by_v(carry)
            accumulate(step, by_deg.get(k, {}))
            for exps, coeff in step.items():
                e = list(exps)
                e[ui] = k - 1
                quotient[tuple(e)] = coeff
            carry = step
        remainder = shifted_by_v(carry)
        accumulate(remainder, by_deg.get(0, {}))
        if remainder:
            raise ValueError(f"inexact division by ({u} - {v})")
        return Poly(vars, quotient)

    def divide_exact(self, divisor: "Poly", var: str) -> "Poly":
        """Exact long division by a divisor involving only `var`.

        The dividend may involve other variables; they ride along in the
        coefficients.  Raises ValueError on a nonzero remainder."""
        if not divisor.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if any(name != var for name in divisor.vars if divisor.degree(name) > 0):
            raise ValueError(f"divisor must be univariate in {var!r}")
        div = {exps[divisor.vars.index(var)] if var in divisor.vars else 0: c
               for exps, c in divisor.terms.items()}
        dd = max(div)
        lead = div[dd]

        vars = _union_vars(self.vars, (var,))
        vi = vars.index(var)
        work = dict(self._terms_over(vars))
        quotient: dict = {}
        while work:
            top = max(e[vi] for e in work)
            if top < dd:
                raise ValueError(f"inexact division by {divisor} in {var!r}")
            heads = [(e, c) for e, c in work.items() if e[vi] == top]
            for exps, coeff in heads:
                q = coeff / lead
                qe = list(exps)
                qe[vi] = top - dd
                key = tuple(qe)
                new = quotient.get(key, 0) + q
                if new:
                    quotient[key] = new
                else:
                    quotient.pop(key, None)
                for k, dc in div.items():
                    se = list(exps)
                    se[vi] = top - dd + k
                    skey = tuple(se)
                    val = work.get(skey, 0) - q * dc
                    if val:
                        work[skey] = val
                    else:
                        work.pop(skey, None)
        return Poly(vars, quotient)

    # -- presentation ------------------------------------------------

    def sorted_terms(self):
        """Terms in the canonical order (total degree, then exponents
        lexicographically descending) used for printing and JSON."""
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = [name if e == 1 else f"{name}^{e}"
                       for name, e in zip(self.vars, exps) if e]
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, format_rational(mag))
            body = "*".join(factors)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def to_json(self):
        """Term-list form: {'variables': [...], 'terms': [{'exponents': [...],
        'coeff': 'p/q'}, ...]} in canonical term order."""
        return {
            "variables": list(self.vars),
            "terms": [{"exponents": list(exps), "coeff": format_rational(coeff)}
                      for exps, coeff in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data) -> "Poly":
        terms = {tuple(t["exponents"]): parse_rational(t["coeff"]) for t in data["terms"]}
        return cls(tuple(data["variables"]), terms)


def determinant(matrix) -> Poly:
    """Determinant of a square matrix of polynomials (or scalars).

    Minor expansion along columns with memoization on the surviving row
    set; fine for the small matrices handled here.
    """
    rows = [[Poly._coerce(entry) for entry in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return Poly.constant(1)
    memo: dict[tuple[int, ...], Poly] = {}

    def minor(alive: tuple[int, ...]) -> Poly:
        if not alive:
            return Poly.constant(1)
        if alive in memo:
            return memo[alive]
        col = n - len(alive)
        total = Poly.constant(0)
        for t, r in enumerate(alive):
            entry = rows[r][col]
            if not entry:
                continue
            rest = alive[:t] + alive[t + 1:]
            term = entry * minor(rest)
            total = total + term if t % 2 == 0 else total - term
        memo[alive] = total
        return total

    return minor(tuple(range(n)))

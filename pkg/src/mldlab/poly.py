"""Exact sparse bivariate polynomials over the rationals.

A polynomial in the fixed variables x, y is a dict mapping exponent pairs
(i, j) to nonzero Fraction coefficients.  All arithmetic is exact; nothing
in this module (or anywhere downstream) ever rounds.

  x^2*y + 3  ->  {(2, 1): Fraction(1), (0, 0): Fraction(3)}

The zero polynomial has an empty support.  BiPoly instances are treated as
immutable after construction and are safe to share.

Univariate helpers at the bottom operate on coefficient lists indexed by
degree (trimmed, zero polynomial = []); they back the restriction-to-a-
divisor computations of the blow-up engine.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import PolySyntaxError, UnknownVariable

Term = tuple[int, int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _grlex_key(t: Term) -> tuple[int, int]:
    return (t[0] + t[1], t[0])


class BiPoly:
    """Sparse exact polynomial in x and y."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Term, Fraction] | None = None, *, _raw: bool = False):
        if terms is None:
            self.terms: dict[Term, Fraction] = {}
        elif _raw:
            self.terms = terms
        else:
            self.terms = {t: Fraction(c) for t, c in terms.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> BiPoly:
        return cls({}, _raw=True)

    @classmethod
    def const(cls, c) -> BiPoly:
        c = Fraction(c)
        return cls({} if c == 0 else {(0, 0): c}, _raw=True)

    @classmethod
    def var(cls, name: str) -> BiPoly:
        if name == "x":
            return cls({(1, 0): _ONE}, _raw=True)
        if name == "y":
            return cls({(0, 1): _ONE}, _raw=True)
        raise ValueError(f"unknown variable {name!r}")

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> BiPoly:
        c = Fraction(c)
        return cls({} if c == 0 else {(i, j): c}, _raw=True)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0, 0), _ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def order(self):
        """Minimal total degree of a term; math.inf for the zero polynomial."""
        if not self.terms:
            return math.inf
        return min(i + j for i, j in self.terms)

    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def leading_term(self) -> tuple[Term, Fraction]:
        """Graded-lexicographic leading term (x heavier than y on ties)."""
        t = max(self.terms, key=_grlex_key)
        return t, self.terms[t]

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"BiPoly({format_poly(self)!r})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: BiPoly) -> BiPoly:
        res = dict(self.terms)
        for t, c in other.terms.items():
            s = res.get(t, _ZERO) + c
            if s:
                res[t] = s
            else:
                res.pop(t, None)
        return BiPoly(res, _raw=True)

    def __sub__(self, other: BiPoly) -> BiPoly:
        res = dict(self.terms)
        for t, c in other.terms.items():
            s = res.get(t, _ZERO) - c
            if s:
                res[t] = s
            else:
                res.pop(t, None)
        return BiPoly(res, _raw=True)

    def __neg__(self) -> BiPoly:
        return BiPoly({t: -c for t, c in self.terms.items()}, _raw=True)

    def __mul__(self, other: BiPoly) -> BiPoly:
        if not self.terms or not other.terms:
            return BiPoly.zero()
        res: dict[Term, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                t = (i1 + i2, j1 + j2)
                s = res.get(t, _ZERO) + c1 * c2
                if s:
                    res[t] = s
                else:
                    res.pop(t, None)
        return BiPoly(res, _raw=True)

    def scale(self, c) -> BiPoly:
        c = Fraction(c)
        if c == 0:
            return BiPoly.zero()
        return BiPoly({t: cc * c for t, cc in self.terms.items()}, _raw=True)

    def __pow__(self, n: int) -> BiPoly:
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self) -> BiPoly:
        """Scale so the graded-lexicographic leading coefficient is 1."""
        if not self.terms:
            return self
        _, c = self.leading_term()
        return self if c == 1 else self.scale(1 / c)

    # -- evaluation and substitution ---------------------------------------

    def eval(self, u, v) -> Fraction:
        u, v = Fraction(u), Fraction(v)
        total = _ZERO
        for (i, j), c in self.terms.items():
            total += c * u**i * v**j
        return total

    def subst(self, px: BiPoly, py: BiPoly) -> BiPoly:
        """Composition f(px, py); exact, cached powers of the substituents."""
        if not self.terms:
            return BiPoly.zero()
        xpows = {0: BiPoly.const(1)}
        ypows = {0: BiPoly.const(1)}

        def power(cache, base, n):
            if n not in cache:
                cache[n] = power(cache, base, n - 1) * base
            return cache[n]

        acc = BiPoly.zero()
        for (i, j), c in sorted(self.terms.items()):
            acc = acc + (power(xpows, px, i) * power(ypows, py, j)).scale(c)
        return acc

    def translate(self, a, b) -> BiPoly:
        """f(x + a, y + b); recentres the point (a, b) at the origin."""
        a, b = Fraction(a), Fraction(b)
        if a == 0 and b == 0:
            return self
        return self.subst(BiPoly({(1, 0): _ONE, (0, 0): a}), BiPoly({(0, 1): _ONE, (0, 0): b}))

    def deriv(self, var: str) -> BiPoly:
        res: dict[Term, Fraction] = {}
        if var == "x":
            for (i, j), c in self.terms.items():
                if i:
                    res[(i - 1, j)] = c * i
        elif var == "y":
            for (i, j), c in self.terms.items():
                if j:
                    res[(i, j - 1)] = c * j
        else:
            raise ValueError(f"unknown variable {var!r}")
        return BiPoly(res, _raw=True)

    def divide_monomial(self, i: int, j: int) -> BiPoly:
        """Exact division by x^i * y^j; every term must be divisible."""
        res: dict[Term, Fraction] = {}
        for (a, b), c in self.terms.items():
            if a < i or b < j:
                raise ArithmeticError(f"not divisible by x^{i}*y^{j}")
            res[(a - i, b - j)] = c
        return BiPoly(res, _raw=True)

    def coeffs_in_y(self) -> list[BiPoly]:
        """Coefficients of y^0, y^1, ... as polynomials in x alone."""
        d = self.deg_y()
        rows: list[dict[Term, Fraction]] = [{} for _ in range(d + 1)]
        for (i, j), c in self.terms.items():
            rows[j][(i, 0)] = c
        return [BiPoly(r, _raw=True) for r in rows]

    def restrict(self, var: str) -> list[Fraction]:
        """Univariate coefficient list of f with the named variable set to 0.

        restrict("x") returns f(0, y) as a list indexed by the y-degree.
        """
        coeffs: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            if var == "x" and i == 0:
                coeffs[j] = c
            elif var == "y" and j == 0:
                coeffs[i] = c
        if not coeffs:
            return []
        out = [_ZERO] * (max(coeffs) + 1)
        for d, c in coeffs.items():
            out[d] = c
        return out


# -- exact division and gcd -------------------------------------------------


def exact_div(f: BiPoly, g: BiPoly) -> BiPoly:
    """f / g when g divides f exactly; raises ArithmeticError otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return BiPoly.zero()
    q: dict[Term, Fraction] = {}
    rem = f
    (gi, gj), gc = g.leading_term()
    while rem.terms:
        (ri, rj), rc = rem.leading_term()
        if ri < gi or rj < gj:
            raise ArithmeticError("not an exact division")
        t = (ri - gi, rj - gj)
        c = rc / gc
        q[t] = c
        rem = rem - g * BiPoly({t: c}, _raw=True)
    return BiPoly(q, _raw=True)


def divides(g: BiPoly, f: BiPoly) -> bool:
    try:
        exact_div(f, g)
        return True
    except ArithmeticError:
        return False


def _from_uni_x(coeffs: list[Fraction]) -> BiPoly:
    return BiPoly({(d, 0): c for d, c in enumerate(coeffs) if c != 0})


def gcd_poly(f: BiPoly, g: BiPoly) -> BiPoly:
    """Gcd in Q[x,y], normalised monic under the graded-lex term order.

    Cheap paths cover the cases the blow-up engine actually hits
    (constants, monomials, single-variable inputs); the general bivariate
    case is delegated to the factorisation oracle.
    """
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return BiPoly.const(1)
    if f.is_monomial() or g.is_monomial():
        fi = min(i for i, _ in f.terms)
        fj = min(j for _, j in f.terms)
        gi = min(i for i, _ in g.terms)
        gj = min(j for _, j in g.terms)
        return BiPoly.monomial(min(fi, gi), min(fj, gj))
    if f.deg_y() == 0 and g.deg_y() == 0:
        return _from_uni_x(uni_gcd(f.restrict("y"), g.restrict("y"))).monic()
    if f.deg_x() == 0 and g.deg_x() == 0:
        ry = uni_gcd(f.restrict("x"), g.restrict("x"))
        return BiPoly({(0, d): c for d, c in enumerate(ry) if c != 0}).monic()
    import sympy

    return from_sympy(sympy.gcd(to_sympy(f), to_sympy(g))).monic()


def gcd_many(polys: Iterable[BiPoly]) -> BiPoly:
    acc = BiPoly.zero()
    for p in polys:
        acc = gcd_poly(acc, p)
        if acc.is_constant() and not acc.is_zero():
            return BiPoly.const(1)
    return acc


# -- resultants --------------------------------------------------------------


def _det_fraction(m: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination over Q."""
    n = len(m)
    m = [row[:] for row in m]
    det = _ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return _ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        pv = m[col][col]
        det *= pv
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] / pv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def resultant_y(f: BiPoly, g: BiPoly) -> list[Fraction]:
    """Res_y(f, g) as a univariate polynomial in x (coefficient list).

    Computed by evaluation at enough rational points and Lagrange
    interpolation; exact throughout.
    """
    df, dg = f.deg_y(), g.deg_y()
    if df < 0 or dg < 0:
        return []
    if df == 0 and dg == 0:
        return [_ONE]
    fc = [c.restrict("y") for c in f.coeffs_in_y()]
    gc = [c.restrict("y") for c in g.coeffs_in_y()]
    if df == 0:
        return uni_pow(fc[0], dg)
    if dg == 0:
        return uni_pow(gc[0], df)
    bound = f.deg_x() * dg + g.deg_x() * df + 1
    xs = [Fraction(k) for k in range(bound)]
    vals = []
    for x0 in xs:
        frow = [uni_eval(c, x0) for c in fc]
        grow = [uni_eval(c, x0) for c in gc]
        n = df + dg
        mat = [[_ZERO] * n for _ in range(n)]
        for r in range(dg):
            for k, c in enumerate(frow):
                mat[r][r + df - k] = c
        for r in range(df):
            for k, c in enumerate(grow):
                mat[dg + r][r + dg - k] = c
        vals.append(_det_fraction(mat))
    return uni_interpolate(list(zip(xs, vals)))


def resultant_x(f: BiPoly, g: BiPoly) -> list[Fraction]:
    """Res_x(f, g) as a univariate polynomial in y."""
    swap = lambda p: BiPoly({(j, i): c for (i, j), c in p.terms.items()})
    return resultant_y(swap(f), swap(g))


# -- sympy bridge (factorisation oracle, cold paths only) --------------------


def to_sympy(f: BiPoly):
    import sympy

    x, y = sympy.symbols("x y")
    return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * x**i * y**j
                       for (i, j), c in sorted(f.terms.items())])


def from_sympy(expr) -> BiPoly:
    import sympy

    x, y = sympy.symbols("x y")
    p = sympy.Poly(expr, x, y, domain="QQ")
    terms: dict[Term, Fraction] = {}
    for (i, j), c in p.terms():
        terms[(i, j)] = Fraction(c.p, c.q)
    return BiPoly(terms)


def factor_rational(f: BiPoly) -> list[tuple[BiPoly, int]]:
    """Irreducible factorisation over Q, constants dropped.

    Factors are monic under graded-lex and sorted deterministically.
    """
    import sympy

    if f.is_zero() or f.is_constant():
        return []
    _, factors = sympy.factor_list(to_sympy(f))
    out = []
    for fac, mult in factors:
        p = from_sympy(fac)
        if not p.is_constant():
            out.append((p.monic(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree(), sorted(fm[0].terms.items()), fm[1]))
    return out


def squarefree_decomposition(f: BiPoly) -> list[tuple[BiPoly, int]]:
    """Group the irreducible factors of f by multiplicity."""
    by_mult: dict[int, BiPoly] = {}
    for p, m in factor_rational(f):
        by_mult[m] = by_mult.get(m, BiPoly.const(1)) * p
    return [(by_mult[m].monic(), m) for m in sorted(by_mult)]


# -- univariate helpers (coefficient lists indexed by degree) ----------------


def uni_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def uni_deg(c: list[Fraction]) -> int:
    return len(c) - 1


def uni_eval(c: list[Fraction], at: Fraction) -> Fraction:
    acc = _ZERO
    for coeff in reversed(c):
        acc = acc * at + coeff
    return acc


def uni_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return uni_trim(out)


def uni_pow(a: list[Fraction], n: int) -> list[Fraction]:
    out = [_ONE]
    for _ in range(n):
        out = uni_mul(out, a)
    return out


def uni_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    a = a[:]
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, cb in enumerate(b):
            a[d + i] -= c * cb
        uni_trim(a)
    return uni_trim(q), a


def uni_monic(c: list[Fraction]) -> list[Fraction]:
    if not c:
        return c
    lead = c[-1]
    return [x / lead for x in c]


def uni_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = a[:], b[:]
    while b:
        _, r = uni_divmod(a, b)
        a, b = b, r
    return uni_monic(a)


def uni_deriv(c: list[Fraction]) -> list[Fraction]:
    return uni_trim([c[i] * i for i in range(1, len(c))])


def uni_interpolate(points: list[tuple[Fraction, Fraction]]) -> list[Fraction]:
    """Lagrange interpolation through distinct rational points."""
    result: list[Fraction] = []
    for i, (xi, yi) in enumerate(points):
        basis = [_ONE]
        denom = _ONE
        for k, (xk, _) in enumerate(points):
            if k != i:
                basis = uni_mul(basis, [-xk, _ONE])
                denom *= xi - xk
        term = [c * yi / denom for c in basis]
        result = uni_trim([p + q for p, q in
                           zip(result + [_ZERO] * len(term), term + [_ZERO] * len(result))])
    return result


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def uni_rational_roots(c: list[Fraction]) -> tuple[list[Fraction], int]:
    """All rational roots of a nonzero univariate polynomial.

    Returns (sorted distinct roots, degree of the root-free residual).
    A positive residual degree means further roots exist only over a
    proper extension of Q.
    """
    c = uni_trim(c[:])
    if not c:
        raise ZeroDivisionError("zero polynomial has every number as a root")
    roots: list[Fraction] = []
    while c and c[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        c = c[1:]
    while uni_deg(c) >= 1:
        if uni_deg(c) == 1:
            roots.append(-c[0] / c[1])
            c = [c[1]]
            continue
        if uni_deg(c) == 2:
            a2, a1, a0 = c[2], c[1], c[0]
            disc = a1 * a1 - 4 * a2 * a0
            if disc < 0:
                break
            num, den = disc.numerator, disc.denominator
            rn, rd = math.isqrt(num), math.isqrt(den)
            if rn * rn != num or rd * rd != den:
                break
            s = Fraction(rn, rd)
            r1, r2 = (-a1 + s) / (2 * a2), (-a1 - s) / (2 * a2)
            for r in (r1, r2):
                if r not in roots:
                    roots.append(r)
            c = [c[2]]
            continue
        found = _rational_root_of(c)
        if found is None:
            break
        roots.append(found)
        # deflate (possibly multiple) occurrences of the root
        q, r = uni_divmod(c, [-found, _ONE])
        assert not r
        c = q
        while True:
            q, r = uni_divmod(c, [-found, _ONE])
            if r:
                break
            c = q
    return sorted(set(roots)), max(uni_deg(c), 0)


def _rational_root_of(c: list[Fraction]):
    """One rational root of a degree>=3 polynomial, or None.

    Tries the rational-root theorem on the cleared integer polynomial;
    falls back to the factorisation oracle when the constant terms are too
    large to enumerate divisors quickly.
    """
    lcm = 1
    for f in c:
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in c]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return Fraction(0)
    if abs(a0) <= 10**8 and abs(an) <= 10**8:
        for p in _int_divisors(a0):
            for q in _int_divisors(an):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if uni_eval(c, cand) == 0:
                        return cand
        return None
    import sympy

    t = sympy.symbols("t")
    expr = sympy.Add(*[sympy.Integer(v) * t**i for i, v in enumerate(ints)])
    _, factors = sympy.factor_list(expr)
    for fac, _ in factors:
        p = sympy.Poly(fac, t)
        if p.degree() == 1:
            a, b = p.all_coeffs()
            return Fraction(-int(b), int(a))
    return None


# -- parser and printer ------------------------------------------------------

_TOKEN_CHARS = set("+-*^()/ \t\n")


def poly_parse(text: str) -> BiPoly:
    """Parse polynomial text in the variables x and y.

    Grammar (documented in docs/grammar.md): integer or integer/integer
    coefficients, operators + - * ^, parentheses, nonnegative integer
    exponents; whitespace insignificant.
    """
    return _Parser(text).parse()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> BiPoly:
        value = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise PolySyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return value

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\n":
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expr(self) -> BiPoly:
        sign = 1
        ch = self._peek()
        if ch in ("+", "-"):
            if ch == "-":
                sign = -1
            self.pos += 1
        acc = self._term().scale(sign)
        while self._peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            t = self._term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def _term(self) -> BiPoly:
        acc = self._power()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                acc = acc * self._power()
            elif ch and (ch.isalnum() or ch == "("):
                # implicit multiplication: 3x, 2(x+y), x y
                acc = acc * self._power()
            else:
                return acc

    def _power(self) -> BiPoly:
        base = self._primary()
        if self._peek() == "^":
            self.pos += 1
            self._skip_ws()
            exp = self._integer()
            return base**exp
        return base

    def _primary(self) -> BiPoly:
        ch = self._peek()
        if ch == "(":
            open_pos = self.pos
            self.pos += 1
            inner = self._expr()
            if self._peek() != ")":
                raise PolySyntaxError("unbalanced parenthesis", open_pos)
            self.pos += 1
            return inner
        if ch.isdigit():
            num = self._integer()
            if self._peek() == "/":
                self.pos += 1
                self._skip_ws()
                den_pos = self.pos
                den = self._integer()
                if den == 0:
                    raise PolySyntaxError("zero denominator", den_pos)
                return BiPoly.const(Fraction(num, den))
            return BiPoly.const(num)
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start : self.pos]
            if name in ("x", "y"):
                return BiPoly.var(name)
            raise UnknownVariable(f"unknown variable {name!r}", start)
        if ch == "":
            raise PolySyntaxError("unexpected end of input", self.pos)
        raise PolySyntaxError(f"unexpected {ch!r}", self.pos)

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise PolySyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: BiPoly) -> str:
    """Canonical text form; poly_parse(format_poly(f)) == f."""
    if f.is_zero():
        return "0"
    parts = []
    for (i, j), c in sorted(f.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True):
        vars_part = "*".join(
            ([f"x^{i}" if i > 1 else "x"] if i else []) + ([f"y^{j}" if j > 1 else "y"] if j else [])
        )
        mag = abs(c)
        if not vars_part:
            body = _format_coeff(mag)
        elif mag == 1:
            body = vars_part
        else:
            body = f"{_format_coeff(mag)}*{vars_part}"
        parts.append(("- " if c < 0 else "+ ") + body)
    first = parts[0]
    text = ("-" + first[2:]) if first.startswith("- ") else first[2:]
    for p in parts[1:]:
        text += " " + p
    return text


def iter_monomials(max_degree: int) -> Iterator[Term]:
    """All exponent pairs with total degree <= max_degree, grlex order."""
    for d in range(max_degree + 1):
        for i in range(d, -1, -1):
            yield (i, d - i)

"""Exact dense linear algebra over the rationals.

Matrices and polynomials are immutable values; every operation returns a
fresh object.  Entries are Python ints or fractions.Fraction -- integral
values are stored as plain ints so that 0/1 adjacency matrices and their
powers multiply at integer speed, while results stay exact throughout.
"""

from __future__ import annotations

from fractions import Fraction


def _norm(x):
    """Collapse integral Fractions to int.  Exactness is unaffected."""
    if type(x) is int:
        return x
    if x.denominator == 1:
        return x.numerator
    return x


def _coerce(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return _norm(x)
    return _norm(Fraction(x))


class RationalMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries):
        data = tuple(tuple(_coerce(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        cols = len(data[0])
        if any(len(row) != cols for row in data):
            raise ValueError("all rows must have the same length")
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def _wrap(cls, rows, cols, data):
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def identity(cls, n):
        return cls._wrap(n, n, tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._wrap(rows, cols, tuple(
            tuple(0 for _ in range(cols)) for _ in range(rows)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def to_lists(self):
        return [list(row) for row in self._data]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"RationalMatrix({[list(map(str, row)) for row in self._data]})"

    def __add__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(
                f"shape mismatch: cannot add {self.rows}x{self.cols} "
                f"and {other.rows}x{other.cols}")
        data = tuple(tuple(_norm(x + y) for x, y in zip(r, s))
                     for r, s in zip(self._data, other._data))
        return RationalMatrix._wrap(self.rows, self.cols, data)

    def __sub__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(
                f"shape mismatch: cannot subtract {other.rows}x{other.cols} "
                f"from {self.rows}x{self.cols}")
        data = tuple(tuple(_norm(x - y) for x, y in zip(r, s))
                     for r, s in zip(self._data, other._data))
        return RationalMatrix._wrap(self.rows, self.cols, data)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = _coerce(c)
        data = tuple(tuple(_norm(c * x) for x in row) for row in self._data)
        return RationalMatrix._wrap(self.rows, self.cols, data)

    def __matmul__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch: cannot multiply {self.rows}x{self.cols} "
                f"by {other.rows}x{other.cols}")
        cols = tuple(zip(*other._data))
        data = tuple(
            tuple(_norm(sum(a * b for a, b in zip(row, col))) for col in cols)
            for row in self._data)
        return RationalMatrix._wrap(self.rows, other.cols, data)

    def __pow__(self, e):
        if self.rows != self.cols:
            raise ValueError(
                f"matrix power requires a square matrix, got {self.rows}x{self.cols}")
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"matrix power requires a non-negative integer, got {e!r}")
        result = RationalMatrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def transpose(self):
        return RationalMatrix._wrap(self.cols, self.rows, tuple(zip(*self._data)))

    def trace(self):
        if self.rows != self.cols:
            raise ValueError(f"trace requires a square matrix, got {self.rows}x{self.cols}")
        return _norm(sum(self._data[i][i] for i in range(self.rows)))

    def is_zero(self):
        return all(x == 0 for row in self._data for x in row)

    def support(self):
        """1-based positions of the nonzero entries, sorted."""
        return [(i + 1, j + 1)
                for i, row in enumerate(self._data)
                for j, x in enumerate(row) if x != 0]

    def rank(self):
        """Exact rank via Bareiss fraction-free elimination over the integers."""
        work = []
        for row in self._data:
            den = 1
            for x in row:
                if type(x) is not int:
                    d = x.denominator
                    den = den * d // _gcd(den, d)
            work.append([int(x * den) for x in row])
        prev = 1
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            piv = next((i for i in range(r, self.rows) if work[i][c]), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            pr = work[r]
            for i in range(r + 1, self.rows):
                wi = work[i]
                lead = wi[c]
                for j in range(c + 1, self.cols):
                    wi[j] = (pr[c] * wi[j] - lead * pr[j]) // prev
                wi[c] = 0
            prev = pr[c]
            r += 1
        return r

    def inverse(self):
        """Exact inverse by rational Gauss-Jordan elimination."""
        if self.rows != self.cols:
            raise ValueError(f"inverse requires a square matrix, got {self.rows}x{self.cols}")
        n = self.rows
        aug = [[Fraction(x) for x in row] +
               [Fraction(1 if i == j else 0) for j in range(n)]
               for i, row in enumerate(self._data)]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c]), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv_p = 1 / aug[c][c]
            aug[c] = [x * inv_p for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        data = tuple(tuple(_norm(x) for x in row[n:]) for row in aug)
        return RationalMatrix._wrap(n, n, data)

    def to_json(self):
        """JSON object with entries as exact "p/q" or "p" strings."""
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[str(x) for x in row] for row in self._data]}

    @classmethod
    def from_json(cls, obj):
        m = cls([[Fraction(s) for s in row] for row in obj["entries"]])
        if m.rows != obj["rows"] or m.cols != obj["cols"]:
            raise ValueError(
                f"declared shape {obj['rows']}x{obj['cols']} does not match "
                f"entries ({m.rows}x{m.cols})")
        return m

    def to_csv(self):
        """Headerless CSV; integer entries only."""
        if any(type(x) is not int for row in self._data for x in row):
            raise ValueError("CSV output supports integer matrices only")
        return "\n".join(",".join(str(x) for x in row) for row in self._data) + "\n"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class Polynomial:
    """Polynomial with exact rational coefficients, stored ascending by degree.

    The zero polynomial has an empty coefficient tuple; any other polynomial
    has a nonzero leading coefficient.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = [_coerce(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def zero(cls):
        return cls(())

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def is_monic(self):
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def monic(self):
        if self.is_zero():
            raise ValueError("the zero polynomial cannot be made monic")
        lead = self.coefficients[-1]
        if lead == 1:
            return self
        return Polynomial([_norm(Fraction(c) / lead) for c in self.coefficients])

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coefficients]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{k}" if c != 1 else f"x^{k}")
        return " + ".join(terms)

    def __add__(self, other):
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = _norm(out[i] + c)
        return Polynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Polynomial([_norm(-c) for c in self.coefficients])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([_norm(c * other) for c in self.coefficients])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] = _norm(out[i + j] + a * b)
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        dl = other.degree
        lead = Fraction(other.coefficients[-1])
        quot = [0] * max(len(rem) - dl, 0)
        for k in range(len(rem) - dl - 1, -1, -1):
            f = _norm(Fraction(rem[k + dl]) / lead)
            quot[k] = f
            if f != 0:
                for j, c in enumerate(other.coefficients):
                    rem[k + j] = _norm(rem[k + j] - f * c)
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        """True if self divides `other` exactly."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def zero_root_multiplicity(self):
        """Multiplicity of 0 as a root (number of leading zero coefficients)."""
        if self.is_zero():
            raise ValueError("the zero polynomial has no root multiplicity")
        k = 0
        while self.coefficients[k] == 0:
            k += 1
        return k

    def shift_down(self, s):
        """Divide by x^s exactly; requires multiplicity of 0 at least s."""
        if any(c != 0 for c in self.coefficients[:s]):
            raise ValueError(f"polynomial is not divisible by x^{s}")
        return Polynomial(self.coefficients[s:])

    def __call__(self, x):
        """Evaluate by Horner's rule at a scalar or a square RationalMatrix."""
        if isinstance(x, RationalMatrix):
            ident = RationalMatrix.identity(x.rows)
            acc = RationalMatrix.zeros(x.rows)
            for c in reversed(self.coefficients):
                acc = acc @ x + ident.scale(c)
            return acc
        acc = 0
        for c in reversed(self.coefficients):
            acc = _norm(acc * x + c)
        return acc


def poly_gcd(p, q):
    """Monic greatest common divisor (Euclid's algorithm)."""
    while not q.is_zero():
        p, q = q, p % q
    if p.is_zero():
        return p
    return p.monic()


def poly_lcm(p, q):
    """Monic least common multiple."""
    if p.is_zero() or q.is_zero():
        return Polynomial.zero()
    g = poly_gcd(p, q)
    return ((p * q) // g).monic()


def minimal_polynomial(a):
    """Least-degree monic polynomial annihilating `a`, computed exactly.

    For each standard basis vector the first linear dependence in its Krylov
    sequence e, Ae, A^2 e, ... gives a local annihilator; the minimal
    polynomial is the lcm of these.  Basis vectors already inside the span
    of earlier Krylov sequences are skipped (that span is A-invariant, so
    the running lcm already annihilates them).
    """
    if a.rows != a.cols:
        raise ValueError(
            f"minimal polynomial requires a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    mat = a._data

    def matvec(v):
        return [_norm(sum(x * y for x, y in zip(row, v))) for row in mat]

    def reduce(vec, basis):
        v = list(vec)
        for pivot, u in basis:
            if v[pivot]:
                f = Fraction(v[pivot]) / u[pivot]
                v = [_norm(x - f * y) for x, y in zip(v, u)]
        return v

    psi = Polynomial([1])
    span = []  # echelon basis of the union of processed Krylov spaces
    for start in range(n):
        e = [0] * n
        e[start] = 1
        if not any(reduce(e, span)):
            continue
        local = []  # (pivot, reduced vector, combination over v_0..v_d)
        v = e
        d = 0
        while True:
            r = list(v)
            rep = [0] * d + [1]
            for pivot, u, urep in local:
                if r[pivot]:
                    f = Fraction(r[pivot]) / u[pivot]
                    r = [_norm(x - f * y) for x, y in zip(r, u)]
                    for idx, c in enumerate(urep):
                        rep[idx] = _norm(rep[idx] - f * c)
            p = next((idx for idx, x in enumerate(r) if x), None)
            if p is None:
                annihilator = Polynomial(rep)
                break
            local.append((p, r, rep))
            v = matvec(v)
            d += 1
        psi = poly_lcm(psi, annihilator)
        for _, u, _rep in local:
            ru = reduce(u, span)
            q = next((idx for idx, x in enumerate(ru) if x), None)
            if q is not None:
                span.append((q, ru))
        if len(span) == n:
            break
    return psi.monic()


def char_polynomial(a):
    """Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recursion."""
    if a.rows != a.cols:
        raise ValueError(
            f"characteristic polynomial requires a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    ident = RationalMatrix.identity(n)
    nmat = ident
    desc = [1]  # coefficients of x^n, x^(n-1), ..., x^0
    for k in range(1, n + 1):
        mk = a @ nmat
        c = _norm(Fraction(-mk.trace(), k))
        desc.append(c)
        nmat = mk + ident.scale(c)
    return Polynomial(list(reversed(desc)))

"""Exact arithmetic substrate: rationals, polynomials, matrices, number fields.

Rationals are `fractions.Fraction` throughout.  Matrices are immutable
(tuples of tuples) and all operations are pure functions, so values can be
shared freely between worker processes.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import sympy


Q = Fraction  # short alias used across the package


def _as_q(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x)!r}")


# ---------------------------------------------------------------------------
# dense univariate polynomials
# ---------------------------------------------------------------------------

def poly_trim(coeffs):
    """Strip trailing zeros; the zero polynomial is the empty tuple."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b):
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                      for i in range(n)])


def poly_neg(a):
    return tuple(-x for x in a)


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def poly_scale(a, c):
    if c == 0:
        return ()
    return tuple(c * x for x in a)


def poly_eval(a, x):
    """Evaluate by Horner; exact in whatever ring the inputs live in."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_deg(a):
    return len(a) - 1 if a else -1


def poly_divmod(a, b):
    """Exact division with remainder over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
    return poly_trim(q), poly_trim(a)


def poly_gcd(a, b):
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if a:
        a = poly_scale(a, Fraction(1) / a[-1])
    return a


def poly_monic(a):
    if not a:
        return a
    return poly_scale(a, Fraction(1, 1) / Fraction(a[-1]))


def poly_to_sympy(a, x):
    return sum(sympy.Rational(c) * x ** i for i, c in enumerate(a))


def poly_from_sympy(expr, x):
    p = sympy.Poly(expr, x)
    coeffs = list(reversed(p.all_coeffs()))
    return poly_trim([Fraction(sympy.Rational(c).p, sympy.Rational(c).q) for c in coeffs])


def poly_factor(a):
    """Factor a rational polynomial into irreducible monic factors.

    Returns a list of (factor, multiplicity) with each factor monic and
    irreducible over the rationals; the product of factors^mult times the
    leading coefficient reproduces the input.
    """
    a = poly_trim(a)
    if poly_deg(a) < 1:
        return []
    x = sympy.Symbol("x")
    _, factors = sympy.factor_list(poly_to_sympy(a, x))
    out = []
    for f, mult in factors:
        fp = poly_from_sympy(f, x)
        if poly_deg(fp) < 1:
            continue
        out.append((poly_monic(fp), int(mult)))
    out.sort(key=lambda fm: (poly_deg(fm[0]), fm[0]))
    return out


def poly_is_irreducible(a):
    a = poly_trim(a)
    if poly_deg(a) < 1:
        return False
    fac = poly_factor(a)
    return len(fac) == 1 and fac[0][1] == 1 and poly_deg(fac[0][0]) == poly_deg(a)


def poly_str(a, var="X"):
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}" if c != 1 else var)
        else:
            parts.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
    return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# number fields  K = Q[x]/(modulus)
# ---------------------------------------------------------------------------

class NumberField:
    """A number field presented by a monic irreducible rational polynomial.

    Elements are coordinate vectors in the power basis 1, x, ..., x^(d-1).
    Degree-1 fields are allowed and behave exactly like the rationals.
    """

    def __init__(self, modulus, check=True):
        mod = poly_trim([_as_q(c) for c in modulus])
        if poly_deg(mod) < 1:
            raise ValueError("modulus must have degree >= 1")
        mod = poly_monic(mod)
        if check and poly_deg(mod) > 1 and not poly_is_irreducible(mod):
            raise ValueError(f"modulus {mod} is reducible over Q")
        self.modulus = mod
        self.degree = poly_deg(mod)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("NumberField", self.modulus))

    def __repr__(self):
        return f"NumberField({poly_str(self.modulus, 'x')})"

    def __call__(self, value):
        if isinstance(value, NFElement):
            if value.field != self:
                raise ValueError("element of a different number field")
            return value
        if isinstance(value, (int, Fraction)):
            coords = [_as_q(value)] + [Fraction(0)] * (self.degree - 1)
            return NFElement(self, coords)
        if isinstance(value, (list, tuple)):
            coords = [_as_q(c) for c in value]
            if len(coords) > self.degree:
                raise ValueError("too many coordinates")
            coords += [Fraction(0)] * (self.degree - len(coords))
            return NFElement(self, coords)
        raise TypeError(f"cannot coerce {value!r}")

    def gen(self):
        if self.degree == 1:
            return self(-self.modulus[0])
        return self([0, 1])

    def zero(self):
        return self(0)

    def one(self):
        return self(1)


class NFElement:
    """Element of a NumberField, stored as power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = tuple(_as_q(c) for c in coords)
        if len(self.coords) != field.degree:
            raise ValueError("coordinate length mismatch")

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("mixed number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return NFElement(self.field, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prod = poly_mul(self.coords, o.coords)
        _, rem = poly_divmod(prod, self.field.modulus)
        rem = list(rem) + [Fraction(0)] * (self.field.degree - len(rem))
        return NFElement(self.field, rem[: self.field.degree])

    __rmul__ = __mul__

    def inverse(self):
        """Inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended gcd of coords (as poly) and modulus
        a = poly_trim(self.coords)
        b = self.field.modulus
        s0, s1 = (Fraction(1),), ()
        while b:
            q, r = poly_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        # a is the gcd (constant for invertible elements)
        if poly_deg(a) != 0:
            raise ZeroDivisionError("element not invertible (reducible modulus?)")
        inv = poly_scale(s0, Fraction(1) / a[0])
        _, rem = poly_divmod(inv, self.field.modulus)
        rem = list(rem) + [Fraction(0)] * (self.field.degree - len(rem))
        return NFElement(self.field, rem[: self.field.degree])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        if self.field.degree == 1:
            return str(self.coords[0])
        return f"NF({list(self.coords)})"


def field_of(values):
    """The common NumberField of a collection, or None if all rational."""
    field = None
    for v in values:
        if isinstance(v, NFElement):
            if field is None:
                field = v.field
            elif field != v.field:
                raise ValueError("mixed number fields")
    return field


# ---------------------------------------------------------------------------
# exact matrices
# ---------------------------------------------------------------------------

class RatMatrix:
    """Immutable rectangular matrix with Fraction (or number-field) entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(e) for e in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = 0
        self.entries = rows
        self.rows = len(rows)
        self.cols = width
        field_of(x for r in rows for x in r)  # raises on mixed fields

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, r, c):
        return cls([[Fraction(0)] * c for _ in range(r)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RatMatrix[{body}]"

    def transpose(self):
        return RatMatrix(list(zip(*self.entries))) if self.rows else RatMatrix([])

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix([[a - b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)])

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ot = other.transpose().entries
            return RatMatrix([[sum(a * b for a, b in zip(row, col))
                               for col in ot] for row in self.entries])
        return RatMatrix([[x * other for x in row] for row in self.entries])

    __rmul__ = __mul__

    def scale(self, c):
        return RatMatrix([[x * c for x in row] for row in self.entries])

    def det(self):
        """Determinant by exact Gaussian elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(row) for row in self.entries]
        det = Fraction(1)
        for j in range(n):
            piv = None
            for i in range(j, n):
                if m[i][j] != 0:
                    piv = i
                    break
            if piv is None:
                return Fraction(0)
            if piv != j:
                m[j], m[piv] = m[piv], m[j]
                det = -det
            det *= m[j][j]
            inv = _entry_inverse(m[j][j])
            for i in range(j + 1, n):
                if m[i][j] == 0:
                    continue
                f = m[i][j] * inv
                for k in range(j, n):
                    m[i][k] = m[i][k] - f * m[j][k]
        return det

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i))


def _entry_inverse(x):
    if isinstance(x, NFElement):
        return x.inverse()
    return Fraction(1) / Fraction(x)


def mat_from_int(rows):
    return RatMatrix([[Fraction(x) for x in r] for r in rows])


def _normalize_column(col):
    """Clear denominators and content from a rational column (sign kept)."""
    if any(isinstance(x, NFElement) for x in col):
        return col  # no normalization over number fields
    den = 1
    for x in col:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in col]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return [Fraction(0)] * len(col)
    return [Fraction(v, g) for v in ints]


def _rref_columns_core(m, normalize):
    """Column echelon form; returns (columns, rank, pivot_rows, transform).

    transform is a cols x cols matrix T with  reduced = M @ T  exactly.
    """
    rows, cols = m.rows, m.cols
    colv = [[m.entries[i][j] for i in range(rows)] for j in range(cols)]
    tr = [[Fraction(i == j) for i in range(cols)] for j in range(cols)]
    next_col = 0
    pivot_rows = []
    for r in range(rows):
        piv = None
        for j in range(next_col, cols):
            if colv[j][r] != 0:
                piv = j
                break
        if piv is None:
            continue
        colv[next_col], colv[piv] = colv[piv], colv[next_col]
        tr[next_col], tr[piv] = tr[piv], tr[next_col]
        pv = colv[next_col][r]
        inv = _entry_inverse(pv)
        for j in range(next_col + 1, cols):
            if colv[j][r] == 0:
                continue
            f = colv[j][r] * inv
            colv[j] = [a - f * b for a, b in zip(colv[j], colv[next_col])]
            tr[j] = [a - f * b for a, b in zip(tr[j], tr[next_col])]
        if normalize:
            before = colv[next_col]
            after = _normalize_column(before)
            # keep the transform in sync with the rescaling
            if after != before:
                for i in range(rows):
                    if before[i] != 0:
                        scale = after[i] / before[i]
                        break
                colv[next_col] = after
                tr[next_col] = [scale * t for t in tr[next_col]]
        pivot_rows.append(r)
        next_col += 1
        if next_col == cols:
            break
    return colv, next_col, pivot_rows, tr


def rref_columns(m: RatMatrix):
    """Column-reduce m; returns (reduced, rank, pivot_rows).

    The reduced matrix is column-space equivalent to m: its nonzero columns
    form a column echelon basis (leading entries in strictly increasing
    rows), and the trailing cols are zero.
    """
    colv, rank, pivot_rows, _ = _rref_columns_core(m, normalize=True)
    reduced = RatMatrix(list(zip(*colv))) if m.rows else RatMatrix([])
    return reduced, rank, pivot_rows


def rref_columns_with_transform(m: RatMatrix):
    """Like rref_columns but also returns T with reduced = m @ T."""
    colv, rank, pivot_rows, tr = _rref_columns_core(m, normalize=True)
    reduced = RatMatrix(list(zip(*colv))) if m.rows else RatMatrix([])
    transform = RatMatrix(list(zip(*tr)))
    return reduced, rank, pivot_rows, transform


def charpoly(m: RatMatrix):
    """Characteristic polynomial det(xI - m) via Faddeev-LeVerrier."""
    if m.rows != m.cols:
        raise ValueError("charpoly of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = RatMatrix.identity(n)
    for k in range(1, n + 1):
        mk = m * mk
        ck = -Fraction(sum(mk.entries[i][i] for i in range(n)), k)
        coeffs[n - k] = ck
        if k < n:
            mk = mk + RatMatrix.identity(n).scale(ck)
    return poly_trim(coeffs)


def charpoly_and_factor(m: RatMatrix):
    """Characteristic polynomial factored into irreducible monic pieces.

    Returns a list of (irreducible monic polynomial, multiplicity) whose
    product (with multiplicity) is exactly charpoly(m).
    """
    return poly_factor(charpoly(m))


def solve_linear(a: RatMatrix, b):
    """Solve a x = b exactly (unique solution required); b is a sequence."""
    n = a.rows
    if a.cols != n or len(b) != n:
        raise ValueError("solve_linear needs a square system")
    m = [list(row) + [bv] for row, bv in zip(a.entries, b)]
    for j in range(n):
        piv = None
        for i in range(j, n):
            if m[i][j] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("singular system")
        m[j], m[piv] = m[piv], m[j]
        inv = _entry_inverse(m[j][j])
        m[j] = [x * inv for x in m[j]]
        for i in range(n):
            if i != j and m[i][j] != 0:
                f = m[i][j]
                m[i] = [x - f * y for x, y in zip(m[i], m[j])]
    return [m[i][n] for i in range(n)]

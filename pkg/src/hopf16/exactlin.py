"""Exact arithmetic over the Gaussian rationals Q(xi), xi^2 = -1, and the
dense linear algebra kernels used by every other module.

All computations are exact: a scalar is (a + b*xi)/d with integer a, b and
positive integer d, kept in lowest terms.  There is no floating point
anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class QQi:
    """An element of Q(xi) = Q[X]/(X^2+1), stored as (a + b*xi)/d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=1):
        if isinstance(a, QQi):
            a, b, d = a.a, a.b, a.d
        else:
            if isinstance(a, Fraction):
                d *= a.denominator
                b *= a.denominator
                a = a.numerator
            if isinstance(b, Fraction):
                d *= b.denominator
                a *= b.denominator
                b = b.numerator
        if d == 0:
            raise ZeroDivisionError("zero denominator in QQi")
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(abs(a), abs(b)), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        self.a = a
        self.b = b
        self.d = d

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        return QQi(fr.numerator, 0, fr.denominator)

    @staticmethod
    def of(val):
        """Coerce an int, Fraction, or QQi to QQi."""
        if isinstance(val, QQi):
            return val
        if isinstance(val, int):
            return QQi(val)
        if isinstance(val, Fraction):
            return QQi.from_fraction(val)
        raise TypeError(f"cannot coerce {type(val)} to QQi")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = QQi.of(other)
        return QQi(self.a * other.d + other.a * self.d,
                   self.b * other.d + other.b * self.d,
                   self.d * other.d)

    __radd__ = __add__

    def __neg__(self):
        return QQi(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-QQi.of(other))

    def __rsub__(self, other):
        return QQi.of(other) + (-self)

    def __mul__(self, other):
        other = QQi.of(other)
        return QQi(self.a * other.a - self.b * other.b,
                   self.a * other.b + self.b * other.a,
                   self.d * other.d)

    __rmul__ = __mul__

    def inv(self):
        n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(xi)")
        return QQi(self.a * self.d, -self.b * self.d, n)

    def __truediv__(self, other):
        return self * QQi.of(other).inv()

    def __rtruediv__(self, other):
        return QQi.of(other) * self.inv()

    def conj(self):
        return QQi(self.a, -self.b, self.d)

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def is_rational(self):
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QQi.of(other)
        if not isinstance(other, QQi):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    # -- conversion ---------------------------------------------------

    @property
    def re(self):
        return Fraction(self.a, self.d)

    @property
    def im(self):
        return Fraction(self.b, self.d)

    def __repr__(self):
        if self.b == 0:
            return str(Fraction(self.a, self.d))
        if self.a == 0:
            s = str(Fraction(self.b, self.d))
            return f"{s}*xi" if s not in ("1", "-1") else s.replace("1", "xi")
        return f"({Fraction(self.a, self.d)}{'+' if self.b > 0 else '-'}{abs(Fraction(self.b, self.d))}*xi)"


ZERO = QQi(0)
ONE = QQi(1)
XI = QQi(0, 1)
MINUS_ONE = QQi(-1)
HALF = QQi(1, 0, 2)


def qi(a, b=0, d=1):
    return QQi(a, b, d)


class Mat:
    """Dense matrix over Q(xi).  Rows are lists of QQi."""

    __slots__ = ("rows", "cols", "e")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.e = [[ZERO] * cols for _ in range(rows)]
        else:
            assert len(entries) == rows and all(len(r) == cols for r in entries)
            self.e = [[QQi.of(x) for x in row] for row in entries]

    @staticmethod
    def identity(n):
        m = Mat(n, n)
        for i in range(n):
            m.e[i][i] = ONE
        return m

    @staticmethod
    def zero(rows, cols):
        return Mat(rows, cols)

    @staticmethod
    def from_rows(entries):
        return Mat(len(entries), len(entries[0]) if entries else 0, entries)

    def copy(self):
        m = Mat(self.rows, self.cols)
        m.e = [row[:] for row in self.e]
        return m

    def __getitem__(self, ij):
        return self.e[ij[0]][ij[1]]

    def __setitem__(self, ij, val):
        self.e[ij[0]][ij[1]] = QQi.of(val)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.rows == other.rows
                and self.cols == other.cols and self.e == other.e)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.e)))

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        m = Mat(self.rows, self.cols)
        m.e = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.e, other.e)]
        return m

    def __sub__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        m = Mat(self.rows, self.cols)
        m.e = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.e, other.e)]
        return m

    def __neg__(self):
        m = Mat(self.rows, self.cols)
        m.e = [[-x for x in r] for r in self.e]
        return m

    def scale(self, s):
        s = QQi.of(s)
        m = Mat(self.rows, self.cols)
        m.e = [[s * x for x in r] for r in self.e]
        return m

    def __matmul__(self, other):
        assert self.cols == other.rows, (self.cols, other.rows)
        out = Mat(self.rows, other.cols)
        oe = out.e
        for i in range(self.rows):
            ri = self.e[i]
            for k in range(self.cols):
                x = ri[k]
                if x.is_zero():
                    continue
                rk = other.e[k]
                oi = oe[i]
                for j in range(other.cols):
                    y = rk[j]
                    if not y.is_zero():
                        oi[j] = oi[j] + x * y
        return out

    __mul__ = __matmul__

    def mul_vec(self, v):
        assert len(v) == self.cols
        out = [ZERO] * self.rows
        for i in range(self.rows):
            acc = ZERO
            for j, x in enumerate(self.e[i]):
                if not x.is_zero() and not QQi.of(v[j]).is_zero():
                    acc = acc + x * v[j]
            out[i] = acc
        return out

    def transpose(self):
        m = Mat(self.cols, self.rows)
        m.e = [[self.e[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return m

    def is_zero(self):
        return all(x.is_zero() for row in self.e for x in row)

    def __repr__(self):
        body = "\n".join("[" + ", ".join(map(repr, row)) + "]" for row in self.e)
        return f"Mat({self.rows}x{self.cols})\n{body}"

    # -- elimination --------------------------------------------------

    def rref(self):
        """Return (rref matrix, pivot column list)."""
        m = self.copy()
        pivots = []
        r = 0
        for c in range(m.cols):
            pivot = None
            for i in range(r, m.rows):
                if not m.e[i][c].is_zero():
                    pivot = i
                    break
            if pivot is None:
                continue
            m.e[r], m.e[pivot] = m.e[pivot], m.e[r]
            inv = m.e[r][c].inv()
            m.e[r] = [inv * x for x in m.e[r]]
            for i in range(m.rows):
                if i != r and not m.e[i][c].is_zero():
                    f = m.e[i][c]
                    m.e[i] = [x - f * y for x, y in zip(m.e[i], m.e[r])]
            pivots.append(c)
            r += 1
            if r == m.rows:
                break
        return m, pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Exact basis of the right null space, as a list of length-cols vectors."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -red.e[r][fc]
            basis.append(v)
        return basis

    def solve(self, b):
        """Some exact solution x of self @ x = b, or None when inconsistent."""
        assert len(b) == self.rows
        aug = Mat(self.rows, self.cols + 1)
        for i in range(self.rows):
            aug.e[i] = self.e[i][:] + [QQi.of(b[i])]
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [ZERO] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.e[r][self.cols]
        return x

    def inverse(self):
        assert self.rows == self.cols
        n = self.rows
        aug = Mat(n, 2 * n)
        for i in range(n):
            aug.e[i] = self.e[i][:] + [ONE if j == i else ZERO for j in range(n)]
        red, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix not invertible")
        out = Mat(n, n)
        for i in range(n):
            out.e[i] = red.e[i][n:]
        return out

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product; the left factor owns the most significant index."""
    out = Mat(a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.e[i][j]
            if x.is_zero():
                continue
            for k in range(b.rows):
                for l in range(b.cols):
                    y = b.e[k][l]
                    if not y.is_zero():
                        out.e[i * b.rows + k][j * b.cols + l] = x * y
    return out


def rank(m: Mat) -> int:
    return m.rank()


def kernel_basis(m: Mat):
    return m.kernel_basis()


def solve_linear(a: Mat, b):
    return a.solve(b)


class Tensor3:
    """Sparse order-3 tensor over Q(xi), indexed (i, j, k)."""

    __slots__ = ("shape", "data")

    def __init__(self, shape):
        self.shape = shape
        self.data = {}

    def __getitem__(self, ijk):
        return self.data.get(ijk, ZERO)

    def __setitem__(self, ijk, val):
        i, j, k = ijk
        n1, n2, n3 = self.shape
        if not (0 <= i < n1 and 0 <= j < n2 and 0 <= k < n3):
            raise IndexError(ijk)
        val = QQi.of(val)
        if val.is_zero():
            self.data.pop(ijk, None)
        else:
            self.data[ijk] = val

    def items(self):
        return self.data.items()

    def __eq__(self, other):
        return isinstance(other, Tensor3) and self.shape == other.shape and self.data == other.data


# -- sparse vectors (dict index -> QQi) used throughout ---------------

def vec_add(u, v):
    out = dict(u)
    for k, x in v.items():
        y = out.get(k)
        s = x if y is None else y + x
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out

def vec_scale(s, u):
    s = QQi.of(s)
    if s.is_zero():
        return {}
    return {k: s * x for k, x in u.items()}

def vec_sub(u, v):
    return vec_add(u, vec_scale(MINUS_ONE, v))

def vec_is_zero(u):
    return all(x.is_zero() for x in u.values())

def vec_clean(u):
    return {k: x for k, x in u.items() if not x.is_zero()}

def vec_from_dense(v):
    return {i: QQi.of(x) for i, x in enumerate(v) if not QQi.of(x).is_zero()}

def vec_to_dense(u, n):
    out = [ZERO] * n
    for k, x in u.items():
        out[k] = x
    return out

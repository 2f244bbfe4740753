"""Exact fields, based spaces and linear maps.

Every structure map in the package is a :class:`LinMap`: a dense matrix of
exact scalars between two :class:`BasedSpace` objects.  Matrices are numpy
object arrays holding ``gmpy2.mpq`` (over Q) or Python ints in ``[0, p)``
(over F_p), so equality is always exact.

Tensor products of spaces are flattened and the ground field ``k`` is
dropped from them, which makes the tensor product strictly associative and
unital on the nose: ``(U*V)*W == U*(V*W)`` and ``k*V == V``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from typing import Iterable, Sequence

import numpy as np
from gmpy2 import is_prime, mpq

__all__ = [
    "Field", "Q", "GF", "FieldError", "SpaceMismatch",
    "BasedSpace", "K", "tensor_spaces", "LinMap",
    "identity", "zero_map", "compose", "chain", "tensor", "permute_factors", "flip",
    "solve_linear",
]


class FieldError(ValueError):
    pass


class SpaceMismatch(ValueError):
    """Raised when two maps are combined across incompatible spaces."""

    def __init__(self, msg, left=None, right=None):
        super().__init__(msg)
        self.left = left
        self.right = right


# ---------------------------------------------------------------------------
# fields


class Field:
    """The ground field: ``Field(0)`` is Q, ``Field(p)`` is F_p for a prime p."""

    def __init__(self, p: int = 0):
        p = int(p)
        if p != 0:
            if p < 2 or not is_prime(p):
                raise FieldError(f"characteristic {p} is not prime")
            if p > 2**31:
                raise FieldError(f"prime {p} exceeds 2**31")
        self.p = p

    @property
    def char(self) -> int:
        return self.p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p == 0 else f"GF({self.p})"

    @property
    def name(self) -> str:
        return "Q" if self.p == 0 else f"Fp {self.p}"

    # scalars ---------------------------------------------------------------

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction, mpq, "a/b" string) to a field element."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p == 0:
            if isinstance(x, float):
                raise FieldError("floats are not exact scalars")
            return mpq(x)
        if isinstance(x, (Fraction, type(mpq(0)))):
            num, den = int(x.numerator), int(x.denominator)
            if den % self.p == 0:
                raise FieldError(f"denominator {den} vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        if isinstance(x, float) or not isinstance(x, (int, np.integer)):
            raise FieldError(f"cannot coerce {x!r} to {self!r}")
        return int(x) % self.p

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / mpq(x)
        return pow(int(x), -1, self.p)

    def format(self, x) -> str:
        if self.p == 0:
            x = mpq(x)
            if x.denominator == 1:
                return str(x.numerator)
            return f"{x.numerator}/{x.denominator}"
        return str(int(x))

    # arrays ----------------------------------------------------------------

    def array(self, data) -> np.ndarray:
        a = np.array(data, dtype=object)
        return self.reduce(np.vectorize(self, otypes=[object])(a) if a.size else a)

    def reduce(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=object)
        if self.p:
            return a % self.p
        return a

    def zeros(self, shape) -> np.ndarray:
        a = np.empty(shape, dtype=object)
        a.fill(self.zero())
        return a

    def eye(self, n: int) -> np.ndarray:
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i] = self.one()
        return a

    def einsum(self, subscripts: str, *operands) -> np.ndarray:
        shapes = tuple(np.shape(o) for o in operands)
        summed, loops = _loop_sizes(subscripts, shapes)
        opt = _contraction_path(subscripts, shapes)
        ints = self._as_int64(operands, summed)
        if ints is not None:
            # a single C loop beats planning when the whole index space is small
            direct = loops is not None and loops <= _DIRECT_LOOPS
            return self._from_int64(np.einsum(subscripts, *ints, optimize=False if direct else opt))
        out = np.einsum(subscripts, *operands, optimize=opt)
        return self.reduce(np.asarray(out, dtype=object))

    # Contractions run in machine integers whenever that is exact: every entry
    # of a result (or of an intermediate) is a sum of at most ``summed``
    # products with one factor per operand, so the bound below rules out
    # overflow.  Over Q this needs integer-valued operands.

    def _as_int64(self, operands, summed):
        if summed is None:
            return None
        ints, bound = [], summed
        for o in operands:
            a = np.asarray(o, dtype=object)
            if self.p:
                top = self.p - 1
                i = a.astype(np.int64)
            else:
                try:
                    i = a.astype(np.int64)
                except (OverflowError, TypeError):
                    return None
                if not (i.astype(object) == a).all():
                    return None
                top = int(np.abs(i).max()) if i.size else 0
            bound *= max(top, 1)
            if bound >= 2**62:
                return None
            ints.append(i)
        return ints

    def _from_int64(self, out):
        out = np.asarray(out)
        if self.p:
            return (out % self.p).astype(object)
        return _to_mpq(out.astype(object)) if out.ndim else mpq(int(out))

    def matmul(self, a, b) -> np.ndarray:
        if a.shape[1] == 0 or b.shape[0] == 0:
            return self.zeros((a.shape[0], b.shape[1]))
        ints = self._as_int64((a, b), a.shape[1])
        if ints is not None:
            return self._from_int64(ints[0] @ ints[1])
        return self.reduce(np.dot(a, b))

    def kron(self, a, b) -> np.ndarray:
        ints = self._as_int64((a, b), 1)
        if ints is not None:
            return self._from_int64(np.kron(*ints))
        return self.reduce(np.kron(a, b))

    def is_zero(self, a) -> bool:
        return not np.any(np.asarray(a, dtype=object) != 0)

    def random_array(self, shape, rng, lo=-2, hi=2) -> np.ndarray:
        """Random array; entries drawn from ``[lo, hi]`` (Q) or all of F_p."""
        if self.p:
            vals = rng.integers(0, self.p, size=shape)
        else:
            vals = rng.integers(lo, hi + 1, size=shape)
        return self.array(vals.tolist() if shape else int(vals))


_to_mpq = np.frompyfunc(mpq, 1, 1)


_DIRECT_LOOPS = 1 << 16


@lru_cache(maxsize=4096)
def _loop_sizes(subscripts: str, shapes):
    """Sizes of the summed-over index space and of the full index space
    (both None if the subscripts have no explicit output)."""
    if "->" not in subscripts:
        return None, None
    ins, out = subscripts.replace(" ", "").split("->")
    sizes = {}
    for sub, shape in zip(ins.split(","), shapes):
        for ch, n in zip(sub, shape):
            sizes[ch] = n
    summed = loops = 1
    for ch, n in sizes.items():
        loops *= n
        if ch not in out:
            summed *= n
    return summed, loops


@lru_cache(maxsize=4096)
def _contraction_path(subscripts: str, shapes: tuple):
    """Greedy contraction order for einsum, memoized on subscripts and shapes."""
    if len(shapes) < 2:
        return False
    dummies = [np.empty(sh, dtype=np.int8) for sh in shapes]
    return np.einsum_path(subscripts, *dummies, optimize="greedy")[0]


Q = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# ---------------------------------------------------------------------------
# spaces


@dataclass(frozen=True)
class BasedSpace:
    """A finite-dimensional space with named basis.

    A tensor product is a BasedSpace whose ``factors`` lists its (atomic)
    tensor factors; an atomic space has ``factors == ()``.
    """

    name: str
    labels: tuple
    factors: tuple = ()

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValueError(f"space {self.name!r} has no basis")
        if len(set(labels)) != len(labels):
            raise ValueError(f"space {self.name!r} has repeated basis labels")
        for lab in labels if not self.factors else ():
            if not lab or any(c.isspace() for c in lab) or "*" in lab:
                raise ValueError(f"bad basis label {lab!r}")

    @classmethod
    def of(cls, name: str, labels: Iterable[str]) -> "BasedSpace":
        return cls(name, tuple(labels))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def atoms(self) -> tuple:
        """Atomic tensor factors (empty for ``k``)."""
        if self.is_unit:
            return ()
        return self.factors or (self,)

    @property
    def is_unit(self) -> bool:
        return self.name == "k" and not self.factors and self.labels == ("1",)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __mul__(self, other: "BasedSpace") -> "BasedSpace":
        return tensor_spaces([self, other])

    def __repr__(self):
        return f"BasedSpace({self.name}, dim={self.dim})"

    def __str__(self):
        return self.name


K = BasedSpace("k", ("1",))


def tensor_spaces(spaces: Sequence[BasedSpace]) -> BasedSpace:
    atoms = tuple(a for s in spaces for a in s.atoms)
    if not atoms:
        return K
    if len(atoms) == 1:
        return atoms[0]
    labels = tuple("*".join(t) for t in product(*(a.labels for a in atoms)))
    return BasedSpace("*".join(a.name for a in atoms), labels, atoms)


# ---------------------------------------------------------------------------
# linear maps


class LinMap:
    """Linear map ``domain -> codomain`` given by a codomain.dim x domain.dim matrix.

    Treat instances as immutable; operations never modify their inputs.
    """

    __slots__ = ("field", "domain", "codomain", "matrix")

    def __init__(self, field: Field, domain: BasedSpace, codomain: BasedSpace, matrix):
        matrix = np.asarray(matrix, dtype=object)
        if matrix.shape != (codomain.dim, domain.dim):
            raise SpaceMismatch(
                f"matrix shape {matrix.shape} does not fit {domain} -> {codomain}",
                domain, codomain)
        self.field = field
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix
        self.matrix.flags.writeable = False

    @classmethod
    def from_entries(cls, field, domain, codomain, entries) -> "LinMap":
        """Build from ``{(row_label, col_label): value}`` (omitted entries are zero)."""
        m = field.zeros((codomain.dim, domain.dim))
        for (r, c), v in entries.items():
            m[codomain.index(r), domain.index(c)] = field(v)
        return cls(field, domain, codomain, m)

    @classmethod
    def from_function(cls, field, domain, codomain, fn) -> "LinMap":
        """Build from ``fn(col_label) -> {row_label: value}`` on basis vectors."""
        m = field.zeros((codomain.dim, domain.dim))
        for j, c in enumerate(domain.labels):
            for r, v in fn(c).items():
                m[codomain.index(r), j] += field(v)
        return cls(field, domain, codomain, field.reduce(m))

    @classmethod
    def from_tensor(cls, field, domain, codomain, t) -> "LinMap":
        t = np.asarray(t, dtype=object)
        return cls(field, domain, codomain, t.reshape(codomain.dim, domain.dim))

    def tensor(self, out_dims: Sequence[int], in_dims: Sequence[int]) -> np.ndarray:
        """View the matrix as a tensor with output legs first, then input legs."""
        shape = tuple(out_dims) + tuple(in_dims)
        if int(np.prod(out_dims)) != self.codomain.dim or int(np.prod(in_dims)) != self.domain.dim:
            raise SpaceMismatch(f"legs {shape} do not fit {self.domain} -> {self.codomain}",
                                self.domain, self.codomain)
        return self.matrix.reshape(shape)

    def __call__(self, vector) -> np.ndarray:
        return self.field.matmul(self.matrix, np.asarray(vector, dtype=object).reshape(-1, 1))[:, 0]

    def image(self, label: str) -> dict:
        """Nonzero coordinates of the image of one basis vector."""
        col = self.matrix[:, self.domain.index(label)]
        return {self.codomain.labels[i]: v for i, v in enumerate(col) if v != 0}

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.field == other.field and self.domain == other.domain
                and self.codomain == other.codomain
                and bool(np.all(self.matrix == other.matrix)))

    __hash__ = None

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return compose(self, other)

    def __add__(self, other: "LinMap") -> "LinMap":
        _same_shape(self, other)
        return LinMap(self.field, self.domain, self.codomain,
                      self.field.reduce(self.matrix + other.matrix))

    def __sub__(self, other: "LinMap") -> "LinMap":
        _same_shape(self, other)
        return LinMap(self.field, self.domain, self.codomain,
                      self.field.reduce(self.matrix - other.matrix))

    def scale(self, c) -> "LinMap":
        return LinMap(self.field, self.domain, self.codomain,
                      self.field.reduce(self.matrix * self.field(c)))

    def with_entry(self, row: int, col: int, value) -> "LinMap":
        m = self.matrix.copy()
        m[row, col] = self.field(value)
        return LinMap(self.field, self.domain, self.codomain, m)

    def relabel(self, domain: BasedSpace | None = None, codomain: BasedSpace | None = None) -> "LinMap":
        """Same matrix between spaces of equal dimension."""
        return LinMap(self.field, domain or self.domain, codomain or self.codomain, self.matrix)

    def to_field(self, field: Field) -> "LinMap":
        return LinMap(field, self.domain, self.codomain, field.array(self.matrix.tolist()))

    @property
    def is_zero(self) -> bool:
        return self.field.is_zero(self.matrix)

    def __repr__(self):
        return f"LinMap({self.domain} -> {self.codomain}, {self.field!r})"


def _same_shape(f: LinMap, g: LinMap):
    if f.field != g.field:
        raise SpaceMismatch(f"field mismatch {f.field!r} vs {g.field!r}")
    if f.domain != g.domain or f.codomain != g.codomain:
        raise SpaceMismatch(
            f"maps {f.domain}->{f.codomain} and {g.domain}->{g.codomain} are not parallel",
            f, g)


def identity(field: Field, space: BasedSpace) -> LinMap:
    return LinMap(field, space, space, field.eye(space.dim))


def zero_map(field: Field, domain: BasedSpace, codomain: BasedSpace) -> LinMap:
    return LinMap(field, domain, codomain, field.zeros((codomain.dim, domain.dim)))


def compose(f: LinMap, g: LinMap) -> LinMap:
    """``f o g``."""
    if f.field != g.field:
        raise SpaceMismatch(f"field mismatch {f.field!r} vs {g.field!r}")
    if g.codomain != f.domain:
        raise SpaceMismatch(f"cannot compose: {g.codomain} is not {f.domain}",
                            g.codomain, f.domain)
    return LinMap(f.field, g.domain, f.codomain, f.field.matmul(f.matrix, g.matrix))


def chain(*maps: LinMap) -> LinMap:
    """``chain(f, g, h) == f o g o h``."""
    return reduce(compose, maps)


def tensor(*maps: LinMap) -> LinMap:
    """Kronecker product; row/column order matches :func:`tensor_spaces`."""
    field = maps[0].field
    for f in maps[1:]:
        if f.field != field:
            raise SpaceMismatch(f"field mismatch {field!r} vs {f.field!r}")
    m = reduce(field.kron, (f.matrix for f in maps))
    return LinMap(field, tensor_spaces([f.domain for f in maps]),
                  tensor_spaces([f.codomain for f in maps]), m)


def permute_factors(field: Field, spaces: Sequence[BasedSpace], perm: Sequence[int]) -> LinMap:
    """Isomorphism ``V_0*...*V_{n-1} -> V_{perm[0]}*...*V_{perm[n-1]}``.

    Output factor ``i`` is input factor ``perm[i]``, so
    ``permute(sigma) o permute(tau) == permute(tau o sigma)`` on indices.
    """
    spaces = list(spaces)
    perm = tuple(perm)
    if sorted(perm) != list(range(len(spaces))):
        raise SpaceMismatch(f"{perm} is not a permutation of {len(spaces)} factors")
    dims = [s.dim for s in spaces]
    n = int(np.prod(dims))
    src = np.arange(n).reshape(dims)
    dst = src.transpose(perm).reshape(-1)  # dst[i] = source index of output basis i
    m = field.zeros((n, n))
    one = field.one()
    for i, j in enumerate(dst):
        m[i, j] = one
    return LinMap(field, tensor_spaces(spaces), tensor_spaces([spaces[i] for i in perm]), m)


def flip(field: Field, u: BasedSpace, v: BasedSpace) -> LinMap:
    return permute_factors(field, [u, v], (1, 0))


def solve_linear(field: Field, a: np.ndarray, b: np.ndarray):
    """Exact solution ``x`` of ``a @ x == b``, or ``None`` if inconsistent.

    Free variables are set to zero.  Row reduction is delegated to sympy's
    ``DomainMatrix`` over ``QQ`` or ``GF(p)``.
    """
    from sympy import GF as SymGF, QQ as SymQQ
    from sympy.polys.matrices import DomainMatrix

    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object).reshape(-1)
    m, n = a.shape
    dom = SymQQ if field.p == 0 else SymGF(field.p)

    def conv(x):
        if field.p == 0:
            x = mpq(x)
            return SymQQ(int(x.numerator), int(x.denominator))
        return dom(int(x))

    rows = [[conv(a[i, j]) for j in range(n)] + [conv(b[i])] for i in range(m)]
    rref, pivots = DomainMatrix(rows, (m, n + 1), dom).rref()
    if n in pivots:
        return None
    rr = rref.to_list()
    x = field.zeros(n)
    for r, c in enumerate(pivots):
        v = rr[r][n]
        x[c] = field(mpq(v) if field.p == 0 else dom.to_int(v))
    return x

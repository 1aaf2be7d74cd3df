"""Finite-dimensional associative unital algebras over the rationals.

An algebra is given by structure constants c[i][j][k] (the coefficient of
basis vector k in the product e_i * e_j) together with the coordinate
vector of the unit.  Construction validates associativity and the unit
laws exhaustively over basis indices.

The default dimension cap guards user-supplied data at desk scale;
systematic constructors such as ``matrix_algebra`` pass the exact size
they need.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation, ValidationError
from .linalg import Matrix

DEFAULT_ALGEBRA_DIM_CAP = 6


@dataclass(frozen=True)
class Algebra:
    dim: int
    mult: tuple   # mult[i][j][k] = coefficient of e_k in e_i e_j
    unit: tuple

    def basis_product(self, i: int, j: int) -> tuple:
        return self.mult[i][j]

    def multiply(self, x, y) -> tuple:
        """Product of two coordinate vectors."""
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                f = xi * yj
                for k, c in enumerate(self.mult[i][j]):
                    if c:
                        out[k] = out[k] + f * c
        return tuple(out)

    def left_mult_matrix(self, x) -> Matrix:
        """Matrix of y -> x * y."""
        cols = [self.multiply(x, _unit_vec(self.dim, j)) for j in range(self.dim)]
        return _from_cols(cols)

    def right_mult_matrix(self, x) -> Matrix:
        """Matrix of y -> y * x."""
        cols = [self.multiply(_unit_vec(self.dim, j), x) for j in range(self.dim)]
        return _from_cols(cols)

    def left_regular(self) -> list:
        """Left multiplication matrices of the basis elements."""
        return [self.left_mult_matrix(_unit_vec(self.dim, i))
                for i in range(self.dim)]

    def right_regular(self) -> list:
        return [self.right_mult_matrix(_unit_vec(self.dim, i))
                for i in range(self.dim)]

    def is_invertible_element(self, x) -> bool:
        # one-sided inverses are two-sided in finite dimension, so a unit
        # is exactly an element whose left multiplication is invertible
        return bool(self.left_mult_matrix(x).det())


def _unit_vec(n: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(n))


def _from_cols(cols) -> Matrix:
    n = len(cols[0]) if cols else 0
    return Matrix(n, len(cols),
                  tuple(cols[j][i] for i in range(n) for j in range(len(cols))))


def make_algebra(structure_constants, unit, *, max_dim=None) -> Algebra:
    """Validate and build an Algebra from raw structure constants.

    Raises ValidationError naming the offending index tuple when
    associativity or a unit law fails.
    """
    mult = tuple(tuple(tuple(row) for row in plane) for plane in structure_constants)
    unit = tuple(unit)
    n = len(mult)
    cap = DEFAULT_ALGEBRA_DIM_CAP if max_dim is None else max_dim
    if n > cap:
        raise ValidationError(
            f"algebra dimension {n} exceeds the cap {cap}; pass max_dim to allow")
    if len(unit) != n or any(len(p) != n or any(len(r) != n for r in p)
                             for p in mult):
        raise ContractViolation("structure constant array has inconsistent shape")
    alg = Algebra(n, mult, unit)
    # associativity: (e_i e_j) e_k == e_i (e_j e_k)
    for i in range(n):
        for j in range(n):
            eij = mult[i][j]
            for k in range(n):
                left = alg.multiply(eij, _unit_vec(n, k))
                right = alg.multiply(_unit_vec(n, i), mult[j][k])
                if left != right:
                    raise ValidationError(
                        f"associativity fails at basis indices (i,j,k)=({i},{j},{k})")
    for j in range(n):
        ej = _unit_vec(n, j)
        if alg.multiply(unit, ej) != ej:
            raise ValidationError(f"left unit law fails at basis index {j}")
        if alg.multiply(ej, unit) != ej:
            raise ValidationError(f"right unit law fails at basis index {j}")
    return alg


_MATRIX_ALGEBRA_CACHE: dict = {}


def matrix_algebra(n: int) -> Algebra:
    """The algebra of n x n matrices on the elementary-matrix basis.

    Basis index (i, j) is flattened to i * n + j, and
    E(i,j) E(k,l) = delta(j,k) E(i,l); the unit is the identity matrix.
    """
    if n < 1:
        raise ContractViolation("matrix_algebra needs n >= 1")
    if n in _MATRIX_ALGEBRA_CACHE:
        return _MATRIX_ALGEBRA_CACHE[n]
    d = n * n
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        mult[i * n + j][k * n + l][i * n + l] = 1
    unit = [0] * d
    for i in range(n):
        unit[i * n + i] = 1
    alg = make_algebra(mult, unit, max_dim=d)
    _MATRIX_ALGEBRA_CACHE[n] = alg
    return alg


def field_algebra() -> Algebra:
    """The ground field as a one-dimensional algebra."""
    return matrix_algebra(1)


def product_field_algebra(n: int) -> Algebra:
    """The split commutative algebra Q^n with coordinatewise product."""
    mult = [[[1 if i == j == k else 0 for k in range(n)]
             for j in range(n)] for i in range(n)]
    return make_algebra(mult, [1] * n, max_dim=n)


def truncated_poly_algebra(n: int) -> Algebra:
    """Q[x] / x^n on the basis 1, x, ..., x^(n-1)."""
    mult = [[[1 if i + j == k else 0 for k in range(n)]
             for j in range(n)] for i in range(n)]
    return make_algebra(mult, _unit_vec(n, 0), max_dim=n)


def upper_triangular_algebra() -> Algebra:
    """The 3-dimensional algebra of upper-triangular 2x2 matrices.

    Basis: E(0,0), E(0,1), E(1,1) in that order.
    """
    prods = {  # (a, b) -> c for nonzero products of basis elements
        (0, 0): 0, (0, 1): 1, (1, 2): 1, (2, 2): 2,
    }
    mult = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for (a, b), c in prods.items():
        mult[a][b][c] = 1
    return make_algebra(mult, (1, 0, 1), max_dim=3)


def algebra_direct_sum(a: Algebra, b: Algebra) -> Algebra:
    n = a.dim + b.dim
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                mult[i][j][k] = a.mult[i][j][k]
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                mult[a.dim + i][a.dim + j][a.dim + k] = b.mult[i][j][k]
    unit = tuple(a.unit) + tuple(b.unit)
    return make_algebra(mult, unit, max_dim=n)


def transport_algebra(alg: Algebra, s: Matrix) -> Algebra:
    """The same algebra expressed in the basis given by the columns of s."""
    if not s.is_square or s.rows != alg.dim:
        raise ContractViolation("change of basis must be square of the algebra dimension")
    sinv = s.inverse()
    n = alg.dim
    mult = []
    for i in range(n):
        plane = []
        fi = s.col(i)
        for j in range(n):
            prod = alg.multiply(fi, s.col(j))
            plane.append(tuple(sinv.apply(prod)))
        mult.append(tuple(plane))
    unit = tuple(sinv.apply(alg.unit))
    return make_algebra(mult, unit, max_dim=n)


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class AlgebraHom:
    """A unital algebra homomorphism source -> target, as a matrix on coordinates."""

    source: Algebra
    target: Algebra
    matrix: Matrix

    def apply(self, x) -> tuple:
        return self.matrix.apply(x)


def make_hom(source: Algebra, target: Algebra, matrix: Matrix) -> AlgebraHom:
    """Validate multiplicativity and unitality on all basis pairs."""
    if (matrix.rows, matrix.cols) != (target.dim, source.dim):
        raise ContractViolation(
            f"hom matrix must be {target.dim}x{source.dim}, got "
            f"{matrix.rows}x{matrix.cols}")
    f = AlgebraHom(source, target, matrix)
    if f.apply(source.unit) != tuple(target.unit):
        raise ValidationError("homomorphism does not preserve the unit")
    images = [matrix.col(i) for i in range(source.dim)]
    for i in range(source.dim):
        for j in range(source.dim):
            lhs = f.apply(source.basis_product(i, j))
            rhs = target.multiply(images[i], images[j])
            if lhs != rhs:
                raise ValidationError(
                    f"multiplicativity fails at basis pair (i,j)=({i},{j})")
    return f


def identity_hom(alg: Algebra) -> AlgebraHom:
    return AlgebraHom(alg, alg, Matrix.identity(alg.dim))


def compose_homs(g: AlgebraHom, f: AlgebraHom) -> AlgebraHom:
    """g after f."""
    if f.target != g.source:
        raise ContractViolation("homomorphisms are not composable")
    return AlgebraHom(f.source, g.target, g.matrix @ f.matrix)


def hom_power(f: AlgebraHom, t: int) -> AlgebraHom:
    if f.source != f.target or t < 0:
        raise ContractViolation("powers need an endomorphism and t >= 0")
    out = identity_hom(f.source)
    for _ in range(t):
        out = compose_homs(f, out)
    return out


def flatten_matrix(m: Matrix) -> tuple:
    """Coordinates of an n x n matrix in the elementary basis of matrix_algebra(n)."""
    return tuple(m.entries)


def unflatten_matrix(vec, n: int) -> Matrix:
    return Matrix(n, n, tuple(vec))


def conjugation_hom(n: int, u: Matrix) -> AlgebraHom:
    """The conjugation automorphism a -> u^-1 a u of matrix_algebra(n).

    This is the Heisenberg-evolution direction: with modulation fixing the
    source algebra to act on the left through the homomorphism, it is the
    modulation of this map that is isomorphic to the regular bimodule
    pointed by u (via left multiplication by u).  Rescaling u by a nonzero
    scalar leaves the map unchanged.
    """
    if (u.rows, u.cols) != (n, n):
        raise ContractViolation("conjugating element has wrong shape")
    uinv = u.inverse()
    alg = matrix_algebra(n)
    cols = []
    for i in range(n):
        for j in range(n):
            e = Matrix(n, n, tuple(1 if (r, c) == (i, j) else 0
                                   for r in range(n) for c in range(n)))
            cols.append(flatten_matrix(uinv @ e @ u))
    mat = Matrix(n * n, n * n,
                 tuple(cols[j][i] for i in range(n * n) for j in range(n * n)))
    return make_hom(alg, alg, mat)


def scalar_inclusion_hom(target: Algebra) -> AlgebraHom:
    """The unique unital homomorphism from the ground field."""
    return make_hom(field_algebra(), target, Matrix.column(target.unit))


def hom_from_images(source: Algebra, target: Algebra, images) -> AlgebraHom:
    """Build and validate a hom from the images of the basis vectors."""
    cols = [tuple(v) for v in images]
    if len(cols) != source.dim or any(len(c) != target.dim for c in cols):
        raise ContractViolation("wrong number or length of basis images")
    mat = Matrix(target.dim, source.dim,
                 tuple(cols[j][i] for i in range(target.dim)
                       for j in range(source.dim)))
    return make_hom(source, target, mat)


def transport_hom(f: AlgebraHom, s_source: Matrix, s_target: Matrix) -> AlgebraHom:
    """The same hom between transported algebras."""
    src = transport_algebra(f.source, s_source)
    tgt = transport_algebra(f.target, s_target)
    mat = s_target.inverse() @ f.matrix @ s_source
    return make_hom(src, tgt, mat)

"""Structure-constant Lie algebras and exact weight modules.

A LieAlgebra is a finite-dimensional algebra over Q(sqrt2, i) given by
structure constants and an invariant symmetric bilinear form; Jacobi and
invariance are checked at construction.  Weight modules store one action
matrix per generator and re-verify the bracket relations when built, so a
module object is itself a certificate that its action is consistent.
"""
from __future__ import annotations

from fractions import Fraction

from .scalars import (ExactMatrix, ExactScalar, ONE, ZERO, I, coerce)

Vector = tuple  # coordinate vector over an algebra's basis


def vec(entries) -> Vector:
    return tuple(coerce(x) for x in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(s, u: Vector) -> Vector:
    s = coerce(s)
    return tuple(s * x for x in u)


def vec_is_zero(u: Vector) -> bool:
    return all(x.is_zero() for x in u)


def unit_vector(n: int, j: int) -> Vector:
    return tuple(ONE if k == j else ZERO for k in range(n))


class LieAlgebra:
    """A Lie algebra with a chosen basis and an invariant bilinear form.

    brackets[i][j] holds the coordinates of [b_i, b_j]; form is the Gram
    matrix of the invariant form on the basis.
    """

    def __init__(self, labels, brackets, form: ExactMatrix, check: bool = True):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.brackets = tuple(tuple(vec(v) for v in row) for row in brackets)
        self.form = form
        if check:
            self._verify()

    def _verify(self):
        n = self.dim
        if len(self.brackets) != n or any(len(r) != n for r in self.brackets):
            raise ValueError("bracket table has wrong shape")
        if self.form.shape != (n, n):
            raise ValueError("form has wrong shape")
        for i in range(n):
            for j in range(n):
                if not vec_is_zero(vec_add(self.brackets[i][j], self.brackets[j][i])):
                    raise ValueError(f"bracket not antisymmetric at ({i},{j})")
                if self.form[i, j] != self.form[j, i]:
                    raise ValueError("form not symmetric")
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = vec_add(self.bracket(self.brackets[i][j], unit_vector(n, k)),
                                vec_add(self.bracket(self.brackets[j][k], unit_vector(n, i)),
                                        self.bracket(self.brackets[k][i], unit_vector(n, j))))
                    if not vec_is_zero(s):
                        raise ValueError(f"Jacobi fails on basis triple ({i},{j},{k})")
        # invariance: <[x,y],z> + <y,[x,z]> = 0 on all basis triples
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.form_value(self.brackets[i][j], unit_vector(n, k))
                    rhs = self.form_value(unit_vector(n, j), self.brackets[i][k])
                    if not (lhs + rhs).is_zero():
                        raise ValueError(f"form not invariant at ({i},{j},{k})")

    def bracket(self, x: Vector, y: Vector) -> Vector:
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                coeff = xi * yj
                for k, c in enumerate(self.brackets[i][j]):
                    if not c.is_zero():
                        out[k] = out[k] + coeff * c
        return tuple(out)

    def form_value(self, x: Vector, y: Vector) -> ExactScalar:
        total = ZERO
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if not yj.is_zero():
                    total = total + xi * yj * self.form[i, j]
        return total

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def basis_vector(self, label: str) -> Vector:
        return unit_vector(self.dim, self.index_of(label))

    def __eq__(self, other):
        return (isinstance(other, LieAlgebra) and self.labels == other.labels
                and self.brackets == other.brackets and self.form == other.form)

    def __repr__(self):
        return f"LieAlgebra({', '.join(self.labels)})"


def sl2() -> LieAlgebra:
    """sl(2) in the basis (h, e, f) with the 2x2 trace form.

    [h,e] = 2e, [h,f] = -2f, [e,f] = h; the trace form has <h,h> = 2,
    <e,f> = 1 and all other basis pairings zero.
    """
    z3 = (ZERO, ZERO, ZERO)
    h, e, f = unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)
    brackets = [
        [z3, vec_scale(2, e), vec_scale(-2, f)],
        [vec_scale(-2, e), z3, h],
        [vec_scale(2, f), vec_scale(-1, h), z3],
    ]
    form = ExactMatrix([[2, 0, 0], [0, 0, 1], [0, 1, 0]])
    return LieAlgebra(("h", "e", "f"), brackets, form)


def so2() -> LieAlgebra:
    """The one-dimensional rotation subalgebra spanned by h, with <h,h> = 2."""
    return LieAlgebra(("h",), [[(ZERO,)]], ExactMatrix([[2]]))


def direct_sum(a: LieAlgebra, b: LieAlgebra, suffixes=("1", "2")) -> LieAlgebra:
    """Direct sum with componentwise brackets and orthogonal-sum form."""
    labels = tuple(l + suffixes[0] for l in a.labels) + tuple(l + suffixes[1] for l in b.labels)
    n, m = a.dim, b.dim
    zero = tuple([ZERO] * (n + m))
    brackets = [[zero] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            brackets[i][j] = tuple(a.brackets[i][j]) + tuple([ZERO] * m)
    for i in range(m):
        for j in range(m):
            brackets[n + i][n + j] = tuple([ZERO] * n) + tuple(b.brackets[i][j])
    form_rows = []
    for i in range(n):
        form_rows.append(list(a.form.rows[i]) + [ZERO] * m)
    for i in range(m):
        form_rows.append([ZERO] * n + list(b.form.rows[i]))
    return LieAlgebra(labels, brackets, ExactMatrix(form_rows))


class WeightModule:
    """A module with a weight-graded basis and one exact matrix per generator.

    kind is "finite", "lowest" or "highest"; for the truncated kinds the
    bracket relations are certified on basis vectors v_0 .. v_{N-1} only
    (the stored top level may violate them, which is inherent to cutting
    an infinite module at a finite level).
    """

    def __init__(self, algebra: LieAlgebra, weights, actions, kind: str = "finite",
                 cartan_index=0, check: bool = True):
        self.algebra = algebra
        self.weights = tuple(int(w) for w in weights)
        self.dim = len(self.weights)
        self.actions = tuple(actions)
        self.kind = kind
        self.cartan_index = cartan_index
        if check:
            self._verify()

    def _verify(self):
        if len(self.actions) != self.algebra.dim:
            raise ValueError("one action matrix per generator required")
        for m in self.actions:
            if m.shape != (self.dim, self.dim):
                raise ValueError("action matrix has wrong shape")
        certified = self.dim if self.kind == "finite" else self.dim - 1
        n = self.algebra.dim
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.actions[i] @ self.actions[j] - self.actions[j] @ self.actions[i]
                rhs = self.action(self.algebra.brackets[i][j])
                diff = lhs - rhs
                for col in range(certified):
                    if any(not diff[r, col].is_zero() for r in range(self.dim)):
                        raise ValueError(
                            f"bracket relation [{self.algebra.labels[i]},"
                            f"{self.algebra.labels[j]}] fails on basis vector {col}")
        if self.cartan_index is not None:
            hmat = self.actions[self.cartan_index]
            for r in range(self.dim):
                for c in range(self.dim):
                    want = coerce(self.weights[r]) if r == c else ZERO
                    if hmat[r, c] != want:
                        raise ValueError("grading generator is not diagonal "
                                         "with the stored weights")

    def action(self, x: Vector) -> ExactMatrix:
        out = ExactMatrix.zeros(self.dim, self.dim)
        for i, xi in enumerate(x):
            if not xi.is_zero():
                out = out + self.actions[i] * xi
        return out

    def weight_multiset(self):
        return sorted(self.weights)

    def restricted(self, algebra: LieAlgebra, generator_images) -> "WeightModule":
        """Restrict along a map sending each generator of `algebra` to a vector here."""
        actions = [self.action(vec(img)) for img in generator_images]
        return WeightModule(algebra, self.weights, actions, kind=self.kind,
                            cartan_index=self.cartan_index)


def sl2_irrep(n: int) -> WeightModule:
    """The (n+1)-dimensional irreducible sl2 module with weights n, n-2, ..., -n.

    Basis w_0 .. w_n ordered by descending weight; f lowers freely,
    e raises with e.w_j = j(n-j+1) w_{j-1}.
    """
    if n < 0:
        raise ValueError("highest weight must be nonnegative")
    dim = n + 1
    weights = [n - 2 * j for j in range(dim)]
    h = ExactMatrix([[coerce(weights[r]) if r == c else ZERO for c in range(dim)]
                     for r in range(dim)])
    e_rows = [[ZERO] * dim for _ in range(dim)]
    f_rows = [[ZERO] * dim for _ in range(dim)]
    for j in range(dim):
        if j + 1 < dim:
            f_rows[j + 1][j] = ONE                      # f w_j = w_{j+1}
        if j >= 1:
            e_rows[j - 1][j] = coerce(j * (n - j + 1))  # e w_j = j(n-j+1) w_{j-1}
    return WeightModule(sl2(), weights, [h, ExactMatrix(e_rows), ExactMatrix(f_rows)])


def lowest_weight_module(mu: int, n_levels: int) -> WeightModule:
    """Truncation of the lowest-weight Verma-type module at level N = n_levels.

    Basis v_0 .. v_N with h v_j = (mu + 2j) v_j, e v_j = v_{j+1} (and
    e v_N = 0, the truncation), f v_j = -j(mu + j - 1) v_{j-1}.
    """
    dim = n_levels + 1
    weights = [mu + 2 * j for j in range(dim)]
    h = ExactMatrix([[coerce(weights[r]) if r == c else ZERO for c in range(dim)]
                     for r in range(dim)])
    e_rows = [[ZERO] * dim for _ in range(dim)]
    f_rows = [[ZERO] * dim for _ in range(dim)]
    for j in range(dim):
        if j + 1 < dim:
            e_rows[j + 1][j] = ONE
        if j >= 1:
            f_rows[j - 1][j] = coerce(-j * (mu + j - 1))
    return WeightModule(sl2(), weights, [h, ExactMatrix(e_rows), ExactMatrix(f_rows)],
                        kind="lowest")


def highest_weight_module(mu: int, n_levels: int) -> WeightModule:
    """Truncation of the highest-weight Verma-type module at level N = n_levels.

    Basis v_0 .. v_N with h v_j = (mu - 2j) v_j, f v_j = v_{j+1} (and
    f v_N = 0), e v_j = j(mu - j + 1) v_{j-1}.
    """
    dim = n_levels + 1
    weights = [mu - 2 * j for j in range(dim)]
    h = ExactMatrix([[coerce(weights[r]) if r == c else ZERO for c in range(dim)]
                     for r in range(dim)])
    e_rows = [[ZERO] * dim for _ in range(dim)]
    f_rows = [[ZERO] * dim for _ in range(dim)]
    for j in range(dim):
        if j + 1 < dim:
            f_rows[j + 1][j] = ONE
        if j >= 1:
            e_rows[j - 1][j] = coerce(j * (mu - j + 1))
    return WeightModule(sl2(), weights, [h, ExactMatrix(e_rows), ExactMatrix(f_rows)],
                        kind="highest")


def dual_module(m: WeightModule) -> WeightModule:
    """The dual action X . phi = -phi o pi(X), i.e. matrices -pi(X)^T.

    The dual basis is graded by the negated weights, kept in the original
    basis order (so the grading generator stays diagonal).
    """
    if m.kind != "finite":
        raise ValueError("dual of a truncated module is not supported")
    actions = [-(a.transpose()) for a in m.actions]
    weights = [-w for w in m.weights]
    return WeightModule(m.algebra, weights, actions, cartan_index=m.cartan_index)


def tensor_action(m1: WeightModule, m2: WeightModule) -> WeightModule:
    """Tensor product module: X acts by pi1(X) (x) 1 + 1 (x) pi2(X)."""
    if m1.algebra != m2.algebra:
        raise ValueError("tensor factors must be modules over the same algebra")
    if m1.kind != "finite" or m2.kind != "finite":
        raise ValueError("tensor of truncated modules is not supported")
    weights = [w1 + w2 for w1 in m1.weights for w2 in m2.weights]
    i1 = ExactMatrix.identity(m1.dim)
    i2 = ExactMatrix.identity(m2.dim)
    actions = [a1.kron(i2) + i1.kron(a2) for a1, a2 in zip(m1.actions, m2.actions)]
    return WeightModule(m1.algebra, weights, actions, cartan_index=m1.cartan_index)

"""Dirac operators as formal first-order elements, and the slice rewrite.

A FormalDiracElement is a finite sum  sum_v  v (x) M_v  where each symbol v
is a first-order element of the ambient Lie algebra (or the unit), and M_v
is an exact matrix acting on the internal space S (x) E (spinors tensored
with the twisting module).  Symbols are stored expanded over the ambient
basis, so two elements are equal exactly when their term maps coincide.

The transfer map rewrites an element whose symbols lie in the orthogonal
complement q of the fixed subalgebra h into one whose symbols lie in the
slice subalgebra l, using the relation that a right derivative along Y in h
acts on equivariant sections as minus the fiber action of Y.  The fiber
action is gamma of the degree-two image of Y on the spinor factor plus the
module action of Y on the twist.
"""

from .scalars import ExactMatrix, coerce, ZERO, ONE, SQRT2
from .lie import vec_add, vec_sub, vec_scale, vec_is_zero, unit_vector
from .triple import solve_in_span


class FormalDiracElement:
    """First-order symbols over an ambient algebra, tensored with matrices.

    terms maps an ambient basis index (or None for the unit symbol) to the
    matrix it is tensored with; zero matrices are dropped, so equality of
    term maps is equality of elements.
    """

    def __init__(self, algebra, matrix_size, terms=None):
        self.algebra = algebra
        self.matrix_size = matrix_size
        clean = {}
        for key, m in (terms or {}).items():
            if key is not None and not (0 <= key < algebra.dim):
                raise ValueError(f"symbol index {key} out of range")
            if m.shape != (matrix_size, matrix_size):
                raise ValueError("matrix has the wrong size")
            if not m.is_zero():
                clean[key] = m
        self.terms = clean

    @classmethod
    def zero(cls, algebra, matrix_size):
        return cls(algebra, matrix_size, {})

    def _require_compatible(self, other):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise ValueError("elements live over different algebras")
        if self.matrix_size != other.matrix_size:
            raise ValueError("elements act on different internal spaces")

    def add_symbol(self, vector, matrix):
        """self + (vector symbol) (x) matrix, expanding over the basis."""
        terms = dict(self.terms)
        for i, c in enumerate(vector):
            if c.is_zero():
                continue
            acc = terms.get(i, ExactMatrix.zeros(self.matrix_size,
                                                 self.matrix_size)) + matrix * c
            if acc.is_zero():
                terms.pop(i, None)
            else:
                terms[i] = acc
        return FormalDiracElement(self.algebra, self.matrix_size, terms)

    def add_unit(self, matrix):
        terms = dict(self.terms)
        acc = terms.get(None, ExactMatrix.zeros(self.matrix_size,
                                                self.matrix_size)) + matrix
        if acc.is_zero():
            terms.pop(None, None)
        else:
            terms[None] = acc
        return FormalDiracElement(self.algebra, self.matrix_size, terms)

    def __add__(self, other):
        self._require_compatible(other)
        terms = dict(self.terms)
        for key, m in other.terms.items():
            acc = terms.get(key, ExactMatrix.zeros(self.matrix_size,
                                                   self.matrix_size)) + m
            if acc.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = acc
        return FormalDiracElement(self.algebra, self.matrix_size, terms)

    def __sub__(self, other):
        return self + other.scaled(-ONE)

    def scaled(self, s):
        s = coerce(s)
        return FormalDiracElement(self.algebra, self.matrix_size,
                                  {k: m * s for k, m in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FormalDiracElement):
            return NotImplemented
        return (self.algebra == other.algebra
                and self.matrix_size == other.matrix_size
                and self.terms == other.terms)

    def symbol_keys(self):
        """Symbol indices present, with None (the unit) sorted first."""
        return sorted(self.terms, key=lambda k: (-1 if k is None else k))

    def describe_difference(self, other):
        """Names of the symbols where the two elements disagree."""
        self._require_compatible(other)
        names = []
        for key in sorted(set(self.terms) | set(other.terms),
                          key=lambda k: (-1 if k is None else k)):
            if self.terms.get(key) != other.terms.get(key):
                names.append("unit" if key is None else
                             self.algebra.labels[key])
        return names

    def __repr__(self):
        keys = ", ".join("1" if k is None else self.algebra.labels[k]
                         for k in self.symbol_keys())
        return f"FormalDiracElement({keys or '0'})"


# -- twist actions ------------------------------------------------------------


def beta_action(triple, module, y):
    """Action on the twist module of an element y of the fixed subalgebra.

    The triple's h-module map sends each h-basis vector to a coordinate
    vector over the module's algebra; y is expanded over the h-basis and
    pushed through.
    """
    if triple.h_module_map is None:
        raise ValueError("the triple carries no h-module map")
    coords = solve_in_span(triple.h_basis, tuple(coerce(c) for c in y))
    if coords is None:
        raise ValueError("vector is not in the fixed subalgebra")
    image = (ZERO,) * module.algebra.dim
    for c, target in zip(coords, triple.h_module_map):
        image = vec_add(image, vec_scale(c, target))
    return module.action(image)


def fiber_action(triple, module, y):
    """The action of y in h on the fiber S (x) E of the induced bundle.

    gamma of the degree-two image of y acts on the spinor factor, and the
    module action of y acts on the twist factor.
    """
    spin = triple.spin_ql
    gamma_part = spin.gamma(triple.pair_g_h.alpha(y))
    return (gamma_part.kron(ExactMatrix.identity(module.dim))
            + ExactMatrix.identity(spin.dim).kron(beta_action(triple,
                                                              module, y)))


# -- the two sides of the embedding ------------------------------------------


def geometric_dirac_element(triple, module):
    """The Dirac element of the ambient symmetric pair, twisted by a module.

    Sum over the orthonormal complement basis b of  <b,b> b (x) gamma(b)
    (x) 1, with the complement realized as the isometric image of the
    slice complement, so the spinor factor is shared with the slice side.
    """
    spin = triple.spin_ql
    size = spin.dim * module.dim
    out = FormalDiracElement.zero(triple.algebra, size)
    ident = ExactMatrix.identity(module.dim)
    for j, (b, sign) in enumerate(zip(triple.q_basis,
                                      triple.pair_g_h.space.signs)):
        matrix = spin.gamma_generator(j).kron(ident)
        out = out.add_symbol(vec_scale(coerce(sign), b), matrix)
    return out


def _signed_slice_sum(triple, module, indices):
    """sum over chosen slice complement vectors of <b,b> b (x) gamma(b) (x) 1."""
    spin = triple.spin_ql
    size = spin.dim * module.dim
    out = FormalDiracElement.zero(triple.algebra, size)
    ident = ExactMatrix.identity(module.dim)
    basis = triple.zq_basis + triple.t_basis
    signs = triple.space_ql.signs
    for j in indices:
        matrix = spin.gamma_generator(j).kron(ident)
        out = out.add_symbol(vec_scale(coerce(signs[j]), basis[j]), matrix)
    return out


def hat_dirac_slice(triple, module):
    """Non-cubic Dirac element of the slice pair, on the shared fiber."""
    return _signed_slice_sum(triple, module,
                             range(len(triple.zq_basis) + len(triple.t_basis)))


def dirac_compact_slice(triple, module):
    """Dirac element of the compact slice sub-pair (the Z-part only)."""
    return _signed_slice_sum(triple, module, range(len(triple.zq_basis)))


def dirac_noncompact_slice(triple, module):
    """Dirac element of the noncompact slice sub-pair (the T-part only)."""
    nz = len(triple.zq_basis)
    return _signed_slice_sum(triple, module,
                             range(nz, nz + len(triple.t_basis)))


def cubic_term(triple, module):
    """Unit-symbol element  1 (x) gamma(c) (x) 1  for the slice cubic c."""
    spin = triple.spin_ql
    size = spin.dim * module.dim
    matrix = spin.gamma(triple.pair_l_lh.cubic_element()).kron(
        ExactMatrix.identity(module.dim))
    return FormalDiracElement.zero(triple.algebra, size).add_unit(matrix)


def residual_term(triple, module):
    """Unit-symbol element  sum_k 1 (x) gamma(T_k) (x) beta(rho_plus T_k).

    This realizes the Dirac element of the pair (h, h cap k) twisted by the
    module, under the isometry identifying h cap s with the noncompact part
    of the slice complement.
    """
    spin = triple.spin_ql
    size = spin.dim * module.dim
    out = FormalDiracElement.zero(triple.algebra, size)
    nz = len(triple.zq_basis)
    for k, t_vec in enumerate(triple.t_basis):
        sign = coerce(triple.space_ql.signs[nz + k])
        matrix = spin.gamma_generator(nz + k).kron(
            beta_action(triple, module, triple.rho_plus_t[k]) * sign)
        out = out.add_unit(matrix)
    return out


def assemble_rhs(triple, module, form, cubic_coefficient=None):
    """The right side of the embedding identity, in one of its two forms.

    Form 1 combines the cubic slice Dirac element with the compact part:

        sqrt2 D_slice + (1 - sqrt2) D_compact
            + (sqrt2 - 2) cubic + residual,

    where D_slice already carries a -cubic summand.  Form 2 splits off the
    noncompact part instead:

        sqrt2 D_noncompact + D_compact - 2 cubic + residual.

    Both expand to the same element.  cubic_coefficient overrides the
    standalone cubic coefficient (sqrt2 - 2 in form 1, -2 in form 2).
    """
    cub = cubic_term(triple, module)
    res = residual_term(triple, module)
    if form == 1:
        slice_cubic = hat_dirac_slice(triple, module) - cub
        coeff = (SQRT2 - coerce(2) if cubic_coefficient is None
                 else coerce(cubic_coefficient))
        return (slice_cubic.scaled(SQRT2)
                + dirac_compact_slice(triple, module).scaled(ONE - SQRT2)
                + cub.scaled(coeff) + res)
    if form == 2:
        coeff = (-coerce(2) if cubic_coefficient is None
                 else coerce(cubic_coefficient))
        return (dirac_noncompact_slice(triple, module).scaled(SQRT2)
                + dirac_compact_slice(triple, module)
                + cub.scaled(coeff) + res)
    raise ValueError("form must be 1 or 2")


# -- rewriting ambient symbols into slice symbols ------------------------------


def transfer(triple, element, module):
    """Rewrite an element with ambient symbols into slice symbols.

    Every ambient basis vector splits as an h-part plus a q-part; the
    q-part is the isometric image of a slice complement vector X, which in
    turn satisfies  image(X) = d_nu X - rho_plus(X)  on each weight piece.
    The slice summand d_nu X stays a symbol; every h-part Y turns into the
    unit symbol with matrix  - M . fiber_action(Y).
    """
    g = triple.algebra
    n = g.dim
    hq = triple.h_basis + triple.q_basis
    hq_matrix = ExactMatrix([[hq[j][i] for j in range(n)]
                             for i in range(n)]).inverse()
    slice_basis = triple.zq_basis + triple.t_basis
    nus = [triple.nu_of(b) for b in slice_basis]
    rho_plus = [triple.rho(1, b) for b in slice_basis]
    nh = len(triple.h_basis)

    out = FormalDiracElement.zero(g, element.matrix_size)
    for key, matrix in element.terms.items():
        if key is None:
            out = out.add_unit(matrix)
            continue
        coords = tuple(hq_matrix[r, key] for r in range(n))
        h_part = (ZERO,) * n
        for a in range(nh):
            h_part = vec_add(h_part, vec_scale(coords[a],
                                               triple.h_basis[a]))
        for b in range(n - nh):
            c = coords[nh + b]
            if c.is_zero():
                continue
            stay = vec_scale(c * triple.d[nus[b]], slice_basis[b])
            out = out.add_symbol(stay, matrix)
            h_part = vec_sub(h_part, vec_scale(c, rho_plus[b]))
        if not vec_is_zero(h_part):
            out = out.add_unit(
                (matrix @ fiber_action(triple, module, h_part)) * (-ONE))
    return out


def is_invariant_element(triple, element, module):
    """Check invariance of a formal element under the fixed subalgebra.

    For each h-basis vector Y the bracket action on symbols plus the
    commutator with the fiber action on matrices must cancel:

        sum_v [Y, v] (x) M_v + sum_v v (x) [fiber(Y), M_v] = 0.
    """
    g = triple.algebra
    size = element.matrix_size
    for y in triple.h_basis:
        fib = fiber_action(triple, module, y)
        acc = FormalDiracElement.zero(g, size)
        for key, m in element.terms.items():
            if key is None:
                comm = fib @ m - m @ fib
                if not comm.is_zero():
                    acc = acc.add_unit(comm)
                continue
            acc = acc.add_symbol(g.bracket(y, unit_vector(g.dim, key)), m)
            comm = fib @ m - m @ fib
            if not comm.is_zero():
                acc = acc.add_symbol(unit_vector(g.dim, key), comm)
        if acc.terms:
            return False
    return True


# -- full verification ---------------------------------------------------------


def verify_embedding(triple, module):
    """Run the embedding identity end to end; returns (name, ok, details) rows.

    Checks the structural input identities, transfers the ambient Dirac
    element to slice symbols, and compares it with both assembled forms of
    the right side, reporting any symbol where they disagree.
    """
    rows = []
    slice_basis = triple.zq_basis + triple.t_basis

    ok = all(vec_is_zero(vec_sub(triple.rho(-1, z), z))
             for z in triple.zq_basis)
    rows.append(("compact-part-fixed", ok,
                 "rho_minus restricts to the identity on the Z-part"))

    ok = all(vec_is_zero(triple.rho(1, z)) for z in triple.zq_basis)
    rows.append(("compact-part-killed", ok,
                 "rho_plus vanishes on the Z-part"))

    ok = True
    for b in triple.t_basis:
        want = vec_sub(vec_scale(SQRT2, b), triple.rho(1, b))
        if not vec_is_zero(vec_sub(triple.rho(-1, b), want)):
            ok = False
    rows.append(("noncompact-part-split", ok,
                 "rho_minus T = sqrt2 T - rho_plus T on the T-part"))

    g = triple.algebra
    ok = True
    for i, x in enumerate(slice_basis):
        for j, y in enumerate(slice_basis):
            if g.form_value(triple.rho(-1, x), triple.rho(-1, y)) != \
                    g.form_value(x, y):
                ok = False
    rows.append(("isometric-complement", ok,
                 "rho_minus preserves all complement pairings"))

    lhs = geometric_dirac_element(triple, module)
    ok = is_invariant_element(triple, lhs, module)
    rows.append(("ambient-invariance", ok,
                 "the ambient Dirac element commutes with the fixed "
                 "subalgebra"))

    moved = transfer(triple, lhs, module)
    for form in (1, 2):
        rhs = assemble_rhs(triple, module, form)
        bad = moved.describe_difference(rhs)
        rows.append((f"form{form}", not bad,
                     "transferred element matches" if not bad else
                     "mismatch at symbols: " + ", ".join(bad)))

    bad = assemble_rhs(triple, module, 1).describe_difference(
        assemble_rhs(triple, module, 2))
    rows.append(("forms-agree", not bad,
                 "the two right-hand presentations expand to the same "
                 "element" if not bad else
                 "presentations differ at: " + ", ".join(bad)))
    return rows


# -- finite-dimensional algebraic operator -------------------------------------


def algebraic_dirac(pair, action_of, spin):
    """The algebraic Dirac operator  sum_j <b_j,b_j> pi(b_j) (x) gamma(b_j).

    action_of maps an ambient coordinate vector to its action matrix on a
    module V; the result acts on V (x) S.  The value does not depend on
    the choice of orthonormal complement basis.
    """
    first = action_of(pair.complement_basis[0])
    size = first.nrows * spin.dim
    out = ExactMatrix.zeros(size, size)
    for j, b in enumerate(pair.complement_basis):
        sign = coerce(pair.space.signs[j])
        out = out + (action_of(b) * sign).kron(spin.gamma_generator(j))
    return out

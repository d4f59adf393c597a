"""Clifford algebras of diagonal quadratic spaces, normal forms included.

Convention: generators satisfy x y + y x = <x, y>, with no factor 2 on the
right-hand side.  An orthonormal generator therefore squares to +1/2 or
-1/2 depending on its sign.  Every element is kept in normal form: a sum
of strictly increasing index monomials with nonzero exact coefficients.

The adjoint embedding alpha of an acting subalgebra into the degree-2
part of the Clifford algebra of an invariant complement, and the cubic
element of such a complement, both live here.  The cubic coefficient
convention reads the orthogonal-basis weights as the signs epsilon_i of
the basis vectors (this choice reproduces the degenerate symmetric-pair
value 0 and the shipped instance's value, and is the one the rest of the
package relies on).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lie import LieAlgebra, Vector, unit_vector, vec, vec_is_zero, vec_sub
from .scalars import ExactScalar, ExactMatrix, ONE, ZERO, HALF, coerce


@dataclass(frozen=True)
class QuadraticSpace:
    """A space with ordered basis labels and a diagonal form diag(signs)."""
    labels: tuple
    signs: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.labels) != len(self.signs):
            raise ValueError("labels and signs must have equal length")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate labels")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def form(self, u, v) -> ExactScalar:
        """Evaluate the diagonal form on two coordinate vectors."""
        total = ZERO
        for eps, x, y in zip(self.signs, u, v):
            if not (x.is_zero() or y.is_zero()):
                total = total + x * y * coerce(eps)
        return total


class CliffordElement:
    """An element of the Clifford algebra of a QuadraticSpace, in normal form.

    terms maps strictly increasing index tuples to nonzero coefficients;
    the empty tuple indexes the unit.
    """

    __slots__ = ("space", "terms")

    def __init__(self, space: QuadraticSpace, terms=None):
        object.__setattr__(self, "space", space)
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if list(mono) != sorted(set(mono)):
                raise ValueError(f"monomial {mono} is not strictly increasing")
            if any(i < 0 or i >= space.dim for i in mono):
                raise ValueError(f"monomial {mono} out of range")
            coeff = coerce(coeff)
            if not coeff.is_zero():
                clean[mono] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CliffordElement is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, space: QuadraticSpace) -> "CliffordElement":
        return cls(space, {})

    @classmethod
    def unit(cls, space: QuadraticSpace, coeff=1) -> "CliffordElement":
        return cls(space, {(): coerce(coeff)})

    @classmethod
    def generator(cls, space: QuadraticSpace, index: int) -> "CliffordElement":
        return cls(space, {(index,): ONE})

    @classmethod
    def vector(cls, space: QuadraticSpace, coords) -> "CliffordElement":
        return cls(space, {(i,): c for i, c in enumerate(coords)})

    @classmethod
    def monomial(cls, space: QuadraticSpace, indices, coeff=1) -> "CliffordElement":
        return cls(space, {tuple(indices): coerce(coeff)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree_part(self, d: int) -> "CliffordElement":
        return CliffordElement(self.space,
                               {m: c for m, c in self.terms.items() if len(m) == d})

    def even_part(self) -> "CliffordElement":
        return CliffordElement(self.space,
                               {m: c for m, c in self.terms.items() if len(m) % 2 == 0})

    def odd_part(self) -> "CliffordElement":
        return CliffordElement(self.space,
                               {m: c for m, c in self.terms.items() if len(m) % 2 == 1})

    def is_homogeneous(self) -> bool:
        return len({len(m) % 2 for m in self.terms}) <= 1

    def parity(self) -> int:
        """0 for even, 1 for odd; the zero element counts as even."""
        parities = {len(m) % 2 for m in self.terms}
        if len(parities) > 1:
            raise ValueError("element has mixed parity")
        return parities.pop() if parities else 0

    def coefficient(self, indices) -> ExactScalar:
        return self.terms.get(tuple(indices), ZERO)

    def scalar_part(self) -> ExactScalar:
        return self.terms.get((), ZERO)

    def vector_coords(self) -> tuple:
        """Coordinates of a degree-1 element; raises on anything else."""
        if any(len(m) != 1 for m in self.terms):
            raise ValueError("element is not of pure degree 1")
        return tuple(self.terms.get((i,), ZERO) for i in range(self.space.dim))

    # -- arithmetic --------------------------------------------------------

    def _require_same_space(self, other: "CliffordElement"):
        if self.space != other.space:
            raise ValueError("elements live over different quadratic spaces")

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        self._require_same_space(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, ZERO) + c
        return CliffordElement(self.space, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CliffordElement(self.space, {m: -c for m, c in self.terms.items()})

    def scaled(self, s) -> "CliffordElement":
        s = coerce(s)
        return CliffordElement(self.space, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self.scaled(other)
        self._require_same_space(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                coeff, mono = _mul_monomials(self.space, m1, m2)
                coeff = coeff * c1 * c2
                if not coeff.is_zero():
                    acc = out.get(mono, ZERO) + coeff
                    if acc.is_zero():
                        out.pop(mono, None)
                    else:
                        out[mono] = acc
        return CliffordElement(self.space, out)

    def __rmul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self.scaled(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, tuple(sorted(self.terms.items(),
                                              key=lambda kv: kv[0]))))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[mono]
            body = "*".join(self.space.labels[i] for i in mono)
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            pieces.append(cs if not body else (body if cs == "1" else f"{cs}*{body}"))
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"CliffordElement({self})"


def _mul_monomials(space: QuadraticSpace, left: tuple, right: tuple):
    """Normal-order the concatenation of two increasing monomials.

    Returns (coefficient, monomial).  Uses e_j e_i = -e_i e_j for i != j
    and e_i e_i = eps_i / 2.
    """
    word = list(left)
    coeff = ONE
    for g in right:
        pos = len(word)
        while pos > 0 and word[pos - 1] > g:
            coeff = -coeff
            pos -= 1
        if pos > 0 and word[pos - 1] == g:
            coeff = coeff * HALF * coerce(space.signs[g])
            del word[pos - 1]
        else:
            word.insert(pos, g)
    return coeff, tuple(word)


def chevalley_j(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """The Chevalley identification of the bivector x ^ y: (xy - yx)/2."""
    for elt in (x, y):
        if any(len(m) != 1 for m in elt.terms):
            raise ValueError("chevalley_j expects degree-1 elements")
    return (x * y - y * x).scaled(HALF)


def clifford_commutator(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a * b - b * a


def inject_element(elt: CliffordElement, target: QuadraticSpace) -> CliffordElement:
    """Re-express an element over a larger space that shares its labels.

    Each generator is matched by label (signs must agree); products are
    re-normal-ordered in the target, so a non-monotone label embedding
    picks up the correct signs automatically.
    """
    index_map = {}
    for i, lbl in enumerate(elt.space.labels):
        j = target.labels.index(lbl)
        if target.signs[j] != elt.space.signs[i]:
            raise ValueError(f"sign mismatch for label {lbl}")
        index_map[i] = j
    out = CliffordElement.zero(target)
    for mono, coeff in elt.terms.items():
        piece = CliffordElement.unit(target, coeff)
        for i in mono:
            piece = piece * CliffordElement.generator(target, index_map[i])
        out = out + piece
    return out


def alpha_split_holds(pair_full: "ReductivePair", pair_first: "ReductivePair",
                      pair_second: "ReductivePair", x) -> bool:
    """Check alpha_full(x) = alpha_first(x) + alpha_second(x) after injection.

    The two partial complements must partition the full complement's labels;
    under the graded tensor splitting of the full Clifford algebra both
    summands are even, so injection by labels is the correct embedding.
    """
    full = pair_full.alpha(x)
    a = inject_element(pair_first.alpha(x), pair_full.space)
    b = inject_element(pair_second.alpha(x), pair_full.space)
    return full == a + b


class ReductivePair:
    """An ambient Lie algebra, an acting subalgebra, and an invariant complement.

    The complement basis must be orthogonal with self-pairings +1 or -1;
    its quadratic space carries the given labels.  Vectors are coordinate
    tuples over the ambient algebra's basis throughout.
    """

    def __init__(self, algebra: LieAlgebra, acting_basis, complement_basis, labels):
        self.algebra = algebra
        self.acting_basis = tuple(vec(v) for v in acting_basis)
        self.complement_basis = tuple(vec(v) for v in complement_basis)
        labels = tuple(labels)
        if len(labels) != len(self.complement_basis):
            raise ValueError("one label per complement basis vector required")
        signs = []
        for i, u in enumerate(self.complement_basis):
            for j, v in enumerate(self.complement_basis):
                p = algebra.form_value(u, v)
                if i == j:
                    if p == ONE:
                        signs.append(1)
                    elif p == -ONE:
                        signs.append(-1)
                    else:
                        raise ValueError(
                            f"complement vector {labels[i]} has norm {p}, not +-1")
                elif not p.is_zero():
                    raise ValueError(
                        f"complement vectors {labels[i]}, {labels[j]} not orthogonal")
        self.space = QuadraticSpace(labels, signs)

    def expand(self, x: Vector) -> tuple:
        """Coordinates of x over the complement basis; raises if x is outside it."""
        coords = []
        for eps, b in zip(self.space.signs, self.complement_basis):
            coords.append(coerce(eps) * self.algebra.form_value(x, b))
        recon = [ZERO] * self.algebra.dim
        for c, b in zip(coords, self.complement_basis):
            for k in range(self.algebra.dim):
                recon[k] = recon[k] + c * b[k]
        if not vec_is_zero(vec_sub(tuple(recon), vec(x))):
            raise ValueError("vector is not in the span of the complement")
        return tuple(coords)

    def vector_element(self, x: Vector) -> CliffordElement:
        """The degree-1 Clifford element representing an ambient vector."""
        return CliffordElement.vector(self.space, self.expand(x))

    def alpha(self, x: Vector) -> CliffordElement:
        """Degree-2 Clifford image of an acting element x.

        alpha(x) = - sum_{i<j} eps_i eps_j <[x, b_i], b_j>  b_i b_j.
        Raises if the complement fails to be stable under ad(x).
        """
        x = vec(x)
        n = self.space.dim
        brackets = [self.algebra.bracket(x, b) for b in self.complement_basis]
        for lbl, br in zip(self.space.labels, brackets):
            # ad(x)-stability: the bracket must equal its complement expansion
            proj = [ZERO] * self.algebra.dim
            for eps, b in zip(self.space.signs, self.complement_basis):
                c = coerce(eps) * self.algebra.form_value(br, b)
                for k in range(self.algebra.dim):
                    proj[k] = proj[k] + c * b[k]
            if not vec_is_zero(vec_sub(tuple(proj), br)):
                raise ValueError(
                    f"complement is not ad-stable: [x, {lbl}] leaves the span")
        terms = {}
        for i in range(n):
            for j in range(i + 1, n):
                c = self.algebra.form_value(brackets[i], self.complement_basis[j])
                if not c.is_zero():
                    eps = coerce(self.space.signs[i] * self.space.signs[j])
                    terms[(i, j)] = -eps * c
        return CliffordElement(self.space, terms)

    def cubic_element(self) -> CliffordElement:
        """The canonical degree-3 element of the complement.

        c = sum_{i<j<k} eps_i eps_j eps_k <[b_i, b_j], b_k>  b_i b_j b_k;
        it vanishes exactly when the complement brackets back into the
        acting subalgebra (a symmetric pair).
        """
        terms = {}
        for i, j, k in combinations(range(self.space.dim), 3):
            c = self.algebra.form_value(
                self.algebra.bracket(self.complement_basis[i], self.complement_basis[j]),
                self.complement_basis[k])
            if not c.is_zero():
                eps = coerce(self.space.signs[i] * self.space.signs[j] * self.space.signs[k])
                terms[(i, j, k)] = eps * c
        return CliffordElement(self.space, terms)

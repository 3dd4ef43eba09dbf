"""Hochschild-style (co)chain complexes over a pointed simplicial set.

Degree n of the chain complex is ``M (x) A^(x)s`` with one algebra slot per
non-basepoint level-n simplex (slots in level-enumeration order, module factor
most significant); the cochain complex uses ``hom`` of the same tensor space
into M.  Face and degeneracy matrices come from the tensor/hom functors
applied to the level maps of the simplicial set, with fiber products ordered
by the multiplicative-ordering certificate and basepoint-fiber factors routed
through the class-to-action assignment.

For a noncommutative algebra the certificate is mandatory: without one (or
with one failing the consistency check) construction refuses loudly, carrying
the witness.  There is no silent fallback to commutative multiplication.
The chain construction applies the mirrored handedness of each class (a
cochain-left class acts through a right-law operator in homology), which is
what makes the circle reproduce the classical complex on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebras import Algebra, is_commutative
from .exact import Field, Matrix, from_columns, nullspace, rank, solve
from .functors import PointedMap, hom_functor_on_morphism, loday_on_morphism
from .modules import LEFT, RIGHT, Multimodule, default_assignment, validate_assignment
from .ordering import (ActionClassReport, OrderingAssignment, Witness, check_nncmo,
                       classify_actions, classify_nncmo)
from .simplicial import SimplexRef, SimplicialSet

CHAIN = "chain"
COCHAIN = "cochain"


class ComplexError(ValueError):
    pass


class OrderingRefusal(ComplexError):
    """Raised when a noncommutative construction lacks a valid multiplicative
    ordering; carries the witness when the set provably has none."""

    def __init__(self, message: str, witness: Witness | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class ComplexSpec:
    X: SimplicialSet
    algebra: Algebra
    module: Multimodule
    variant: str  # 'chain' | 'cochain'
    max_degree: int
    assignment: OrderingAssignment | None = None
    action_map: dict[str, str] | None = None
    normalized: bool = False

    def __post_init__(self):
        if self.variant not in (CHAIN, COCHAIN):
            raise ComplexError(f"unknown variant {self.variant!r}")
        if self.max_degree < 1:
            raise ComplexError("max_degree must be at least 1")
        if self.module.algebra != self.algebra:
            raise ComplexError("module is not over the given algebra")


class Complex:
    """Graded dimensions plus exact differentials; Betti numbers are computed
    from ranks on first access (rank is the expensive part)."""

    def __init__(self, variant: str, field: Field, dims, differentials: dict[int, Matrix]):
        self.variant = variant
        self.field = field
        self.dims = tuple(dims)
        self.differentials = dict(differentials)
        self.max_degree = len(self.dims) - 1
        self._betti: tuple[int, ...] | None = None
        self._caveats: tuple[int, ...] | None = None

    @property
    def betti(self) -> tuple[int, ...]:
        if self._betti is None:
            b, c = _betti_table(self.variant, self.dims, self.differentials,
                                self.field, self.max_degree)
            self._betti = tuple(b)
            self._caveats = tuple(c)
        return self._betti

    @property
    def caveat_degrees(self) -> tuple[int, ...]:
        self.betti
        return self._caveats

    def differential(self, n: int) -> Matrix:
        try:
            return self.differentials[n]
        except KeyError:
            raise ComplexError(f"no differential at degree {n}") from None

    def verify_square_zero(self) -> bool:
        for n in sorted(self.differentials):
            if n + 1 in self.differentials:
                a, b = self.differentials[n], self.differentials[n + 1]
                prod = a * b if self.variant == CHAIN else b * a
                if not prod.is_zero():
                    return False
        return True


# ---------------------------------------------------------------------------
# level maps as pointed maps

def face_pointed_map(X: SimplicialSet, level: int, i: int,
                     assignment: OrderingAssignment | None,
                     classes: ActionClassReport | None = None,
                     action_map: dict[str, str] | None = None):
    """The face map d_i : X_level -> X_{level-1} as a pointed map between the
    level enumerations, with fiber orders from the assignment (level order
    when no assignment is needed) and basepoint-fiber actions resolved
    through the class assignment."""
    src = X.level_nonbase(level)
    dst = X.level_nonbase(level - 1)
    dst_index = {ref: k + 1 for k, ref in enumerate(dst)}
    images = [0]
    for ref in src:
        img = X.face(ref, i)
        images.append(0 if X.is_basepoint(img) else dst_index[img])
    orders = {}
    fibers: dict[int, list[int]] = {}
    for j, ref in enumerate(src, start=1):
        if images[j] != 0:
            fibers.setdefault(images[j], []).append(j)
    for tgt, members in fibers.items():
        if assignment is not None:
            target_ref = dst[tgt - 1]
            orders[tgt] = tuple(sorted(
                members,
                key=lambda j: assignment.position(level, i, target_ref, src[j - 1])))
        else:
            orders[tgt] = tuple(members)
    phi = PointedMap(len(src), len(dst), tuple(images), orders)
    actions = None
    if action_map is not None and classes is not None:
        actions = {}
        for j, ref in enumerate(src, start=1):
            if images[j] == 0:
                site = (level, ref, i)
                cls = classes.class_of_site(site)
                if cls is None:
                    raise ComplexError(
                        f"no action class covers the site d_{i} of "
                        f"{X.monotone_name(ref)} at level {level}")
                actions[j] = action_map[cls.class_id]
    return phi, actions


def degeneracy_pointed_map(X: SimplicialSet, level: int, i: int) -> PointedMap:
    """s_i : X_level -> X_{level+1}; injective, so fibers are singletons."""
    src = X.level_nonbase(level)
    dst = X.level_nonbase(level + 1)
    dst_index = {ref: k + 1 for k, ref in enumerate(dst)}
    images = [0]
    for ref in src:
        img = X.degeneracy(ref, i)
        images.append(dst_index[img])
    orders = {images[j]: (j,) for j in range(1, len(src) + 1)}
    return PointedMap(len(src), len(dst), tuple(images), orders)


class _Assembler:
    """Shared matrix assembly for both variants (no ordering gate here;
    ``build_complex`` is the gated entry point)."""

    def __init__(self, spec: ComplexSpec, classes: ActionClassReport,
                 action_map: dict[str, str]):
        self.spec = spec
        self.classes = classes
        self.action_map = action_map

    def face_matrix(self, level: int, i: int) -> Matrix:
        """Chain: the matrix C_level -> C_{level-1}; cochain: the coface
        C^{level-1} -> C^level induced by d_i : X_level -> X_{level-1}."""
        spec = self.spec
        phi, actions = face_pointed_map(spec.X, level, i, spec.assignment,
                                        self.classes, self.action_map)
        if spec.variant == CHAIN:
            return loday_on_morphism(spec.algebra, spec.module, phi, actions)
        return hom_functor_on_morphism(spec.algebra, spec.module, phi, actions)

    def degeneracy_matrix(self, level: int, i: int) -> Matrix:
        """Chain: C_level -> C_{level+1}; cochain: C^{level+1} -> C^level."""
        spec = self.spec
        phi = degeneracy_pointed_map(spec.X, level, i)
        if spec.variant == CHAIN:
            return loday_on_morphism(spec.algebra, spec.module, phi, {})
        return hom_functor_on_morphism(spec.algebra, spec.module, phi, {})

    def degree_dim(self, n: int) -> int:
        return self.spec.module.dim * self.spec.algebra.dim ** len(
            self.spec.X.level_nonbase(n))

    def differential(self, n: int) -> Matrix:
        """Chain: delta_n = sum (-1)^i d_i from level n; cochain: delta^n from
        the faces of level n+1."""
        spec = self.spec
        f = spec.algebra.field
        level = n if spec.variant == CHAIN else n + 1
        acc = None
        for i in range(level + 1):
            m = self.face_matrix(level, i)
            if i % 2:
                m = m.scale(f.neg(f.one()))
            acc = m if acc is None else acc + m
        return acc


def _resolve(spec: ComplexSpec):
    """Validate the spec against the ordering theorem and the action typing;
    returns (classes, action_map) or raises ``OrderingRefusal``."""
    X, alg = spec.X, spec.algebra
    commutative = is_commutative(alg)
    classes = classify_actions(X, max(spec.max_degree, 2))
    if not commutative:
        if spec.assignment is None:
            result = classify_nncmo(X, max(spec.max_degree, 2))
            if not result.admits:
                raise OrderingRefusal(
                    "the algebra is noncommutative and this simplicial set admits "
                    "no multiplicative ordering (it is not one-dimensional); "
                    "witness: " + "; ".join(result.witness.describe(X)),
                    result.witness)
            raise OrderingRefusal(
                "the algebra is noncommutative: an ordering certificate is required "
                "(the set admits one; classify_nncmo constructs it)")
        if spec.assignment.cutoff < spec.max_degree:
            raise OrderingRefusal(
                f"assignment cutoff {spec.assignment.cutoff} is below max_degree "
                f"{spec.max_degree}")
        bad = check_nncmo(X, spec.assignment, spec.max_degree)
        if bad is not None:
            raise OrderingRefusal(
                "the supplied ordering assignment is not multiplicative; witness: "
                + "; ".join(bad.describe(X)), bad)
    amap = spec.action_map
    if amap is None:
        amap = default_assignment(spec.module, classes, spec.variant)
    problems = validate_assignment(spec.module, classes, amap, spec.variant)
    if problems:
        raise ComplexError("action assignment rejected: " + "; ".join(problems))
    if not commutative:
        _check_simultaneous_actions(spec, classes, amap)
    return classes, amap


def _check_simultaneous_actions(spec: ComplexSpec, classes, amap):
    """Factors acting through one face map multiply as operators, so their
    assigned actions must commute pairwise.  Distinct actions commute by the
    multimodule axioms; a repeated action only commutes with itself when its
    operators do, which fails for e.g. regular multiplication of a
    noncommutative algebra."""
    X, alg, module = spec.X, spec.algebra, spec.module
    f = alg.field
    self_commuting: dict[str, bool] = {}

    def ok(name: str) -> bool:
        if name not in self_commuting:
            ops = module.action(name).operators
            self_commuting[name] = all(
                ops[i] * ops[j] == ops[j] * ops[i]
                for i in range(alg.dim) for j in range(i + 1, alg.dim))
        return self_commuting[name]

    for level in range(1, spec.max_degree + 1):
        for i in range(level + 1):
            names = []
            for ref in X.level_nonbase(level):
                if X.is_basepoint(X.face(ref, i)):
                    cls = classes.class_of_site((level, ref, i))
                    names.append(amap[cls.class_id])
            for k, a in enumerate(names):
                for b in names[k + 1:]:
                    if a == b and not ok(a):
                        raise ComplexError(
                            f"action {a!r} is assigned to two factors of the same "
                            f"face map (d_{i} at level {level}) but its operators "
                            "do not commute with each other; map the classes to "
                            "distinct commuting actions")


def make_spec(X: SimplicialSet, algebra: Algebra, module: Multimodule,
              variant: str, max_degree: int, normalized: bool = False) -> ComplexSpec:
    """Convenience constructor: derives the ordering certificate for
    noncommutative algebras (refusing with a witness when none exists) and a
    default action map."""
    assignment = None
    if not is_commutative(algebra):
        result = classify_nncmo(X, max(max_degree, 2))
        if not result.admits:
            raise OrderingRefusal(
                "no multiplicative ordering exists for this simplicial set, so the "
                "construction is undefined over a noncommutative algebra; witness: "
                + "; ".join(result.witness.describe(X)),
                result.witness)
        assignment = result.assignment
    return ComplexSpec(X, algebra, module, variant, max_degree,
                       assignment=assignment, normalized=normalized)


def build_complex(spec: ComplexSpec) -> Complex:
    """Assemble dims, differentials and Betti numbers for the spec.

    Noncommutative algebras refuse without a valid ordering certificate.  With
    ``normalized=True`` the complex is cut down to the (co)normalized
    subcomplex first; Betti numbers are unchanged by normalization.
    """
    classes, amap = _resolve(spec)
    asm = _Assembler(spec, classes, amap)
    D = spec.max_degree
    dims = [asm.degree_dim(n) for n in range(D + 1)]
    diffs: dict[int, Matrix] = {}
    if spec.variant == CHAIN:
        for n in range(1, D + 1):
            diffs[n] = asm.differential(n)
    else:
        for n in range(D):
            diffs[n] = asm.differential(n)
    if spec.normalized:
        dims, diffs = _normalize(spec, asm, dims, diffs)
    return Complex(spec.variant, spec.algebra.field, dims, diffs)


def _normalize(spec: ComplexSpec, asm: _Assembler, dims, diffs):
    """Cut to the Moore subcomplex: chain degree n keeps the joint kernel of
    d_1..d_n, cochain degree n the joint kernel of the codegeneracies
    s^0..s^{n-1}.  Differentials are re-expressed in the kernel bases."""
    f = spec.algebra.field
    D = spec.max_degree
    bases: list[Matrix] = []
    for n in range(D + 1):
        if n == 0:
            bases.append(Matrix.identity(dims[0], f))
            continue
        stacked_entries = {}
        offset = 0
        if spec.variant == CHAIN:
            mats = [asm.face_matrix(n, i) for i in range(1, n + 1)]
        else:
            mats = [asm.degeneracy_matrix(n - 1, i) for i in range(n)]
        for m in mats:
            for (r, c), v in m.entries.items():
                stacked_entries[(r + offset, c)] = v
            offset += m.rows
        stacked = Matrix(offset, dims[n], f, stacked_entries)
        basis = nullspace(stacked)
        bases.append(from_columns(basis, dims[n], f))
    new_dims = [b.cols for b in bases]
    new_diffs = {}
    for n, d in diffs.items():
        if spec.variant == CHAIN:
            src, dst = bases[n], bases[n - 1]
        else:
            src, dst = bases[n], bases[n + 1]
        new_diffs[n] = solve(dst, d * src)
    return new_dims, new_diffs


def _betti_table(variant, dims, diffs, field, D):
    """Homology dimensions per degree; the top degree needs the next
    differential and is flagged as a caveat instead."""
    ranks = {n: rank(m) for n, m in diffs.items()}
    betti = []
    caveats = []
    for n in range(D + 1):
        if variant == CHAIN:
            out_rank = ranks.get(n, 0)          # delta_n : C_n -> C_{n-1}
            in_rank = ranks.get(n + 1, 0)       # delta_{n+1} missing at the top
            if n == D:
                caveats.append(n)
        else:
            out_rank = ranks.get(n, 0)          # delta^n : C^n -> C^{n+1}
            in_rank = ranks.get(n - 1, 0)
            if n == D:
                caveats.append(n)
        betti.append(dims[n] - out_rank - in_rank)
    return betti, sorted(set(caveats))


def betti(complex_: Complex, n: int) -> int:
    if not (0 <= n < len(complex_.dims)):
        raise ComplexError(f"degree {n} outside the computed range")
    return complex_.betti[n]


# ---------------------------------------------------------------------------
# the classical complex (independent construction, no simplicial machinery)

def _find_tagged_action(module: Multimodule, tag: str) -> str:
    names = [n for n, a in sorted(module.actions.items()) if a.tag == tag]
    if len(names) != 1:
        raise ComplexError(
            f"classical complex needs exactly one action tagged {tag!r}; "
            f"module {module.name!r} has {names or 'none'}")
    return names[0]


def classical_complex(alg: Algebra, module: Multimodule, variant: str,
                      max_degree: int) -> Complex:
    """The textbook Hochschild (co)chain complex of a bimodule, built directly
    from the three-case face formula (no simplicial sets involved).

    Degree-n tensors are enumerated with the module factor most significant
    and then slots n, n-1, ..., 1, which matches the circle's level
    enumeration (the slot consumed by the top face comes first).
    """
    if variant not in (CHAIN, COCHAIN):
        raise ComplexError(f"unknown variant {variant!r}")
    left = module.action(_find_tagged_action(module, LEFT))
    right = module.action(_find_tagged_action(module, RIGHT))
    f = alg.field
    da, dm = alg.dim, module.dim
    from itertools import product as iter_product

    def tensor_index(mu, slots):
        # slots[j-1] holds slot j; significance order (mu, slot n, ..., slot 1)
        idx = mu
        for j in range(len(slots), 0, -1):
            idx = idx * da + slots[j - 1]
        return idx

    def face_chain(n, i) -> Matrix:
        entries = {}
        for mu in range(dm):
            for slots in iter_product(range(da), repeat=n):
                col = tensor_index(mu, slots)
                if i == 0:
                    op = right.operators[slots[0]]
                    mvec = [op.get(r, mu) for r in range(dm)]
                    rest_support = [[(slots[j - 1], f.one())] for j in range(2, n + 1)]
                elif i == n:
                    op = left.operators[slots[n - 1]]
                    mvec = [op.get(r, mu) for r in range(dm)]
                    rest_support = [[(slots[j - 1], f.one())] for j in range(1, n)]
                else:
                    mvec = [f.one() if r == mu else f.zero() for r in range(dm)]
                    prod = tuple(alg.table[slots[i - 1]][slots[i]])
                    rest_support = []
                    for j in range(1, n):
                        if j == i:
                            rest_support.append([(k, c) for k, c in enumerate(prod)
                                                 if c != f.zero()])
                        elif j < i:
                            rest_support.append([(slots[j - 1], f.one())])
                        else:
                            rest_support.append([(slots[j], f.one())])
                for mo in range(dm):
                    if mvec[mo] == f.zero():
                        continue
                    for combo in iter_product(*rest_support) if rest_support else [()]:
                        coeff = mvec[mo]
                        out_slots = []
                        for k, c in combo:
                            coeff = f.mul(coeff, c)
                            out_slots.append(k)
                        if coeff == f.zero():
                            continue
                        row = tensor_index(mo, out_slots)
                        key = (row, col)
                        s = f.add(entries.get(key, f.zero()), coeff)
                        if s == f.zero():
                            entries.pop(key, None)
                        else:
                            entries[key] = s
        return Matrix(dm * da ** (n - 1), dm * da ** n, f, entries)

    def coface(n, i) -> Matrix:
        # C^n -> C^{n+1}: (d^i f)(a_1..a_{n+1})
        entries = {}
        for arg in iter_product(range(da), repeat=n + 1):
            if i == 0:
                op = left.operators[arg[0]]
                inner = [(j, arg[j - 1]) for j in range(2, n + 2)]  # slots shift down
                inner_support = [[(t, f.one())] for (_, t) in inner]
            elif i == n + 1:
                op = right.operators[arg[n]]
                inner_support = [[(arg[j - 1], f.one())] for j in range(1, n + 1)]
            else:
                op = None
                prod = tuple(alg.table[arg[i - 1]][arg[i]])
                inner_support = []
                for j in range(1, n + 1):
                    if j == i:
                        inner_support.append([(k, c) for k, c in enumerate(prod)
                                              if c != f.zero()])
                    elif j < i:
                        inner_support.append([(arg[j - 1], f.one())])
                    else:
                        inner_support.append([(arg[j], f.one())])
            for mu in range(dm):
                if op is None:
                    opcol = [(mu, f.one())]
                else:
                    opcol = [(r, op.get(r, mu)) for r in range(dm)
                             if op.get(r, mu) != f.zero()]
                if not opcol:
                    continue
                for combo in iter_product(*inner_support) if inner_support else [()]:
                    coeff = f.one()
                    in_slots = []
                    for k, c in combo:
                        coeff = f.mul(coeff, c)
                        in_slots.append(k)
                    if coeff == f.zero():
                        continue
                    col = tensor_index(mu, in_slots)
                    for mo, oc in opcol:
                        row = tensor_index(mo, list(arg))
                        key = (row, col)
                        s = f.add(entries.get(key, f.zero()), f.mul(coeff, oc))
                        if s == f.zero():
                            entries.pop(key, None)
                        else:
                            entries[key] = s
        return Matrix(dm * da ** (n + 1), dm * da ** n, f, entries)

    D = max_degree
    dims = [dm * da ** n for n in range(D + 1)]
    diffs: dict[int, Matrix] = {}
    if variant == CHAIN:
        for n in range(1, D + 1):
            acc = None
            for i in range(n + 1):
                m = face_chain(n, i)
                if i % 2:
                    m = m.scale(f.neg(f.one()))
                acc = m if acc is None else acc + m
            diffs[n] = acc
    else:
        for n in range(D):
            acc = None
            for i in range(n + 2):
                m = coface(n, i)
                if i % 2:
                    m = m.scale(f.neg(f.one()))
                acc = m if acc is None else acc + m
            diffs[n] = acc
    return Complex(variant, f, dims, diffs)


# ---------------------------------------------------------------------------
# (co)simplicial identity check on assembled matrices

def cosimplicial_check(spec: ComplexSpec, cutoff: int) -> list[str]:
    """Exhaustively verify the (co)simplicial identities on the assembled
    face and degeneracy matrices up to the cutoff; returns violations.

    Runs without the ordering gate on purpose: this is the diagnostic that
    shows *why* a bad assignment breaks the complex.
    """
    classes = classify_actions(spec.X, max(cutoff, 2))
    amap = spec.action_map
    if amap is None:
        amap = default_assignment(spec.module, classes, spec.variant)
    asm = _Assembler(spec, classes, amap)
    chain = spec.variant == CHAIN

    faces: dict[tuple[int, int], Matrix] = {}
    degens: dict[tuple[int, int], Matrix] = {}

    def F(level, i):
        if (level, i) not in faces:
            faces[(level, i)] = asm.face_matrix(level, i)
        return faces[(level, i)]

    def S(level, i):
        if (level, i) not in degens:
            degens[(level, i)] = asm.degeneracy_matrix(level, i)
        return degens[(level, i)]

    def comp_faces(outer, inner):
        # matrix of d_outer o d_inner (inner applied first, from `level`)
        (lo, io), (li, ii) = outer, inner
        if chain:
            return F(lo, io) * F(li, ii)
        return F(li, ii) * F(lo, io)

    problems = []
    for n in range(2, cutoff + 1):
        for j in range(1, n + 1):
            for i in range(j):
                lhs = comp_faces((n - 1, i), (n, j))
                rhs = comp_faces((n - 1, j - 1), (n, i))
                if lhs != rhs:
                    problems.append(f"d_{i} d_{j} != d_{j-1} d_{i} at level {n}")
    for n in range(0, cutoff - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                a = _compose2(S(n + 1, i), S(n, j), chain)
                b = _compose2(S(n + 1, j + 1), S(n, i), chain)
                if a != b:
                    problems.append(f"s_{i} s_{j} != s_{j+1} s_{i} at level {n}")
    for n in range(1, cutoff):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = _compose2(F(n + 1, i), S(n, j), chain)
                if i < j:
                    rhs = _compose2(S(n - 1, j - 1), F(n, i), chain)
                elif i in (j, j + 1):
                    dim_n = asm.degree_dim(n)
                    rhs = Matrix.identity(dim_n, spec.algebra.field)
                else:
                    rhs = _compose2(S(n - 1, j), F(n, i - 1), chain)
                if lhs != rhs:
                    problems.append(f"d_{i} s_{j} identity fails at level {n}")
    return problems


def _compose2(second: Matrix, first: Matrix, chain: bool) -> Matrix:
    """Matrix of (second o first) in the given variance."""
    return second * first if chain else first * second


# ---------------------------------------------------------------------------
# pairs of simplicial sets

def is_subsimplicial(X: SimplicialSet, Y: SimplicialSet) -> bool:
    """X's nondegenerate simplices all appear in Y, same names, dims, faces,
    and the basepoints agree."""
    if X.simplices[X.basepoint].name != Y.simplices[Y.basepoint].name:
        return False
    for s in X.simplices:
        try:
            t = Y.simplices[Y.id_of(s.name)]
        except Exception:
            return False
        if t.dim != s.dim:
            return False
        for fx, fy in zip(s.faces, t.faces):
            if fx.word != fy.word:
                return False
            if X.simplices[fx.base].name != Y.simplices[fy.base].name:
                return False
    return True


def pair_constraints(X: SimplicialSet, Y: SimplicialSet) -> dict:
    """Which commutativity constraints a pair X inside Y places on a pair of
    algebras (B acting on the ambient set, A on the subset, via a map
    eps: B -> A)."""
    if not is_subsimplicial(X, Y):
        raise ComplexError(f"{X.name!r} is not a sub-simplicial-set of {Y.name!r}")
    if Y.dimension() <= 1:
        verdict = "both-noncommutative"
        detail = "the ambient set is one dimensional: both algebras may be noncommutative"
    elif X.dimension() <= 1:
        verdict = "A-noncommutative-epsilonB-central"
        detail = ("only the subset is one dimensional: the inner algebra may be "
                  "noncommutative, the ambient one must be commutative and its image "
                  "must land in the center of the inner algebra")
    else:
        verdict = "both-commutative"
        detail = "neither set is one dimensional: both algebras must be commutative"
    return {"pair": [X.name, Y.name],
            "dim_inner": X.dimension(), "dim_ambient": Y.dimension(),
            "verdict": verdict, "detail": detail}

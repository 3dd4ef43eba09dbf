"""Multimodules: a vector space with several named, commuting algebra actions.

Each action is stored as one operator matrix per algebra basis element,
always applied on the left of column vectors.  Orientation is a tag, not a
storage difference:

* a ``left`` action satisfies  op(a) op(b) = op(ab),
* a ``right`` action satisfies op(a) op(b) = op(ba),
* an ``lr`` action satisfies both (so op(ab) = op(ba)).

Distinct actions must commute: op_i(a) op_j(b) = op_j(b) op_i(a) for all
basis a, b.  ``validate`` checks every axiom exhaustively over basis pairs and
reports the violated axiom with the basis indices involved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import Algebra, is_commutative, multiply
from .exact import Matrix, mat_mul

LEFT = "left"
RIGHT = "right"
LR = "lr"
TAGS = (LEFT, RIGHT, LR)


class ModuleError(ValueError):
    pass


@dataclass(frozen=True)
class Action:
    tag: str
    operators: tuple[Matrix, ...]  # one dim_M x dim_M matrix per algebra basis elt

    def operator_of(self, algebra: Algebra, vec) -> Matrix:
        """Operator of a general algebra element (linear combination)."""
        f = algebra.field
        dim_m = self.operators[0].rows
        acc = Matrix.zero(dim_m, dim_m, f)
        for i, c in enumerate(vec):
            c = f.of(c)
            if c != f.zero():
                acc = acc + self.operators[i].scale(c)
        return acc


@dataclass(frozen=True)
class Multimodule:
    name: str
    algebra: Algebra
    dim: int
    actions: dict[str, Action]

    def action(self, name: str) -> Action:
        try:
            return self.actions[name]
        except KeyError:
            raise ModuleError(f"unknown action {name!r}; have {sorted(self.actions)}") from None

    def action_names(self) -> list[str]:
        return sorted(self.actions)

    def describe(self) -> str:
        tags = ", ".join(f"{n}:{a.tag}" for n, a in sorted(self.actions.items()))
        return f"{self.name} (dim {self.dim}; actions {tags})"


def validate(module: Multimodule) -> list[str]:
    """Exhaustive axiom check; returns a list of violation messages (empty = ok)."""
    alg = module.algebra
    f = alg.field
    d = alg.dim
    problems = []
    ident = Matrix.identity(module.dim, f)
    for name, act in sorted(module.actions.items()):
        if act.tag not in TAGS:
            problems.append(f"action {name!r}: unknown tag {act.tag!r}")
            continue
        if len(act.operators) != d:
            problems.append(f"action {name!r}: expected {d} operators, got {len(act.operators)}")
            continue
        if any(op.rows != module.dim or op.cols != module.dim for op in act.operators):
            problems.append(f"action {name!r}: operator shape mismatch")
            continue
        if act.operator_of(alg, alg.unit) != ident:
            problems.append(f"action {name!r}: not unital")
        for i in range(d):
            for j in range(d):
                comp = mat_mul(act.operators[i], act.operators[j])
                ij = act.operator_of(alg, multiply(alg, alg.basis_vector(i), alg.basis_vector(j)))
                ji = act.operator_of(alg, multiply(alg, alg.basis_vector(j), alg.basis_vector(i)))
                if act.tag in (LEFT, LR) and comp != ij:
                    problems.append(
                        f"action {name!r}: left law fails at basis pair ({i},{j})")
                if act.tag in (RIGHT, LR) and comp != ji:
                    problems.append(
                        f"action {name!r}: right law fails at basis pair ({i},{j})")
    names = sorted(module.actions)
    for x in range(len(names)):
        for y in range(x + 1, len(names)):
            a, b = module.actions[names[x]], module.actions[names[y]]
            for i in range(d):
                for j in range(d):
                    if mat_mul(a.operators[i], b.operators[j]) != mat_mul(b.operators[j], a.operators[i]):
                        problems.append(
                            f"actions {names[x]!r} and {names[y]!r} do not commute "
                            f"at basis pair ({i},{j})")
    return problems


def _validated(module: Multimodule) -> Multimodule:
    problems = validate(module)
    if problems:
        raise ModuleError("; ".join(problems))
    return module


# ---------------------------------------------------------------------------
# builders

def regular_bimodule(alg: Algebra) -> Multimodule:
    """A as a bimodule over itself: actions 'left' (a.m) and 'right' (m.a)."""
    left = Action(LEFT, tuple(alg.left_mult_matrix(alg.basis_vector(i)) for i in range(alg.dim)))
    right = Action(RIGHT, tuple(alg.right_mult_matrix(alg.basis_vector(i)) for i in range(alg.dim)))
    return _validated(Multimodule("regular", alg, alg.dim, {"left": left, "right": right}))


def symmetric_module(alg: Algebra) -> Multimodule:
    """A over itself with the single lr multiplication action (commutative only)."""
    if not is_commutative(alg):
        raise ModuleError("symmetric_module requires a commutative algebra")
    act = Action(LR, tuple(alg.left_mult_matrix(alg.basis_vector(i)) for i in range(alg.dim)))
    return _validated(Multimodule("symmetric", alg, alg.dim, {"mult": act}))


def multi_regular(alg: Algebra, l: int, r: int) -> Multimodule:
    """M = A with l left-multiplication and r right-multiplication actions.

    Valid only when the copies commute; for noncommutative algebras two
    left-multiplication copies already fail (ab != ba), and the builder
    rejects the configuration with the violated pair reported.
    """
    actions = {}
    for k in range(l):
        actions[f"left{k + 1}" if l > 1 else "left"] = Action(
            LEFT, tuple(alg.left_mult_matrix(alg.basis_vector(i)) for i in range(alg.dim)))
    for k in range(r):
        actions[f"right{k + 1}" if r > 1 else "right"] = Action(
            RIGHT, tuple(alg.right_mult_matrix(alg.basis_vector(i)) for i in range(alg.dim)))
    return _validated(Multimodule(f"multi-regular {l},{r}", alg, alg.dim, actions))


def tensor_square_bimodule(alg: Algebra) -> Multimodule:
    """M = A (x) A with left and right multiplication on each tensor factor.

    The four actions commute pairwise for any associative algebra, giving a
    genuine (2,2)-multimodule usable over wedges of two circles.
    """
    f = alg.field
    d = alg.dim
    dim_m = d * d

    def op(mat: Matrix, factor: int) -> Matrix:
        entries = {}
        for (r, c), v in mat.entries.items():
            for other in range(d):
                if factor == 0:
                    entries[(r * d + other, c * d + other)] = v
                else:
                    entries[(other * d + r, other * d + c)] = v
        return Matrix(dim_m, dim_m, f, entries)

    actions = {}
    for factor, label in ((0, "1"), (1, "2")):
        actions[f"left{label}"] = Action(
            LEFT, tuple(op(alg.left_mult_matrix(alg.basis_vector(i)), factor) for i in range(d)))
        actions[f"right{label}"] = Action(
            RIGHT, tuple(op(alg.right_mult_matrix(alg.basis_vector(i)), factor) for i in range(d)))
    return _validated(Multimodule("tensor-square", alg, dim_m, actions))


def dual_module(module: Multimodule) -> Multimodule:
    """Transpose every operator and mirror every tag (left <-> right).

    Transposing flips the composition law, so the result is again a valid
    multimodule; it is the coefficient module of the dual complex.
    """
    mirror = {LEFT: RIGHT, RIGHT: LEFT, LR: LR}
    actions = {name + "*": Action(mirror[a.tag], tuple(op.transpose() for op in a.operators))
               for name, a in module.actions.items()}
    return _validated(Multimodule(module.name + "-dual", module.algebra, module.dim, actions))


def custom_module(name: str, alg: Algebra, dim: int, actions: dict[str, Action]) -> Multimodule:
    return _validated(Multimodule(name, alg, dim, dict(actions)))


# ---------------------------------------------------------------------------
# assignment compatibility (action classes are produced by the ordering module)

_COMPATIBLE = {
    LEFT: (LEFT, LR),
    RIGHT: (RIGHT, LR),
    LR: (LR,),
    "untyped": TAGS,
}

_MIRROR_TYPE = {LEFT: RIGHT, RIGHT: LEFT, LR: LR, "untyped": "untyped"}


def required_type(class_type: str, variant: str) -> str:
    """Action type a class needs for the given complex variant.

    Class types are normalized on the cochain side; the chain construction
    applies actions with mirrored handedness, so tags flip for variant
    'chain'.
    """
    if variant == "cochain":
        return class_type
    if variant == "chain":
        return _MIRROR_TYPE[class_type]
    raise ModuleError(f"unknown variant {variant!r}")


def validate_assignment(module: Multimodule, classes, assignment: dict[str, str],
                        variant: str = "cochain") -> list[str]:
    """Check a class -> action map preserves action type.

    ``classes`` is an ActionClassReport (ordering module).  Returns violation
    messages; empty list means the assignment is admissible for the variant.
    """
    problems = []
    known = {c.class_id for c in classes.classes}
    for cid in assignment:
        if cid not in known:
            problems.append(f"unknown class {cid!r}")
    for cls in classes.classes:
        if cls.class_id not in assignment:
            problems.append(f"class {cls.class_id!r} has no assigned action")
            continue
        aname = assignment[cls.class_id]
        if aname not in module.actions:
            problems.append(f"class {cls.class_id!r} mapped to unknown action {aname!r}")
            continue
        need = required_type(cls.action_type, variant)
        tag = module.actions[aname].tag
        if tag not in _COMPATIBLE[need]:
            problems.append(
                f"class {cls.class_id!r} (type {cls.action_type}, needs {need} for {variant}) "
                f"mapped to action {aname!r} tagged {tag}")
    return problems


def default_assignment(module: Multimodule, classes, variant: str = "cochain") -> dict[str, str]:
    """Deterministically pick a compatible action for every class.

    Exact-tag matches win over lr fallbacks; unused actions win over reused
    ones (distinct classes can act through the same face map, and only
    distinct actions are guaranteed to commute); remaining ties break by
    action name.  Raises if some class cannot be served.
    """
    out = {}
    used: set[str] = set()
    for cls in classes.classes:
        need = required_type(cls.action_type, variant)
        allowed = _COMPATIBLE[need]
        best = None
        for aname in sorted(module.actions):
            tag = module.actions[aname].tag
            if tag not in allowed:
                continue
            score = (allowed.index(tag), aname in used, aname)
            if best is None or score < best:
                best = score
        if best is None:
            raise ModuleError(
                f"module {module.name!r} has no action compatible with class "
                f"{cls.class_id!r} (type {cls.action_type}, variant {variant})")
        out[cls.class_id] = best[2]
        used.add(best[2])
    return out

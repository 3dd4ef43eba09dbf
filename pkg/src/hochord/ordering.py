"""Fiber orderings of face maps and the multiplicative-ordering machinery.

A noncommutative coefficient algebra needs a recipe for multiplying the
factors that a face map merges into one tensor slot.  The data is a total
order on every fiber of every single face map (an ``OrderingAssignment``);
orders of compositions are always induced lexicographically from the step
data.  The assignment is *multiplicative* (an NNCMO) when, for every pair of
equal two-step compositions d_i d_j = d_{j-1} d_i, the two induced orders
agree on every common fiber whose image is not the basepoint.  Any two equal
factorizations of a longer composition are connected by such adjacent swaps,
so the quadratic adjacent check suffices; a full-factorization oracle check
is available behind a flag to validate the reduction on concrete inputs.

Fibers over the basepoint never carry an order: their factors act on the
coefficient module instead, through the action classes computed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, permutations

from .simplicial import SimplexRef, SimplicialSet


class OrderingError(ValueError):
    pass


class InconclusiveSearch(RuntimeError):
    """The backtracking search hit its node limit; no verdict was reached."""


class CyclicOrderingUnavailable(OrderingError):
    """The canonical cyclic-ordering construction does not apply to this set."""


# ---------------------------------------------------------------------------
# fibers and assignments

def fibers_of_face(X: SimplicialSet, level: int, i: int) -> dict[SimplexRef, tuple[SimplexRef, ...]]:
    """Fibers of d_i : X_level -> X_{level-1} over non-basepoint targets,
    each listed in level-enumeration order."""
    out: dict[SimplexRef, list[SimplexRef]] = {}
    for ref in X.level_nonbase(level):
        img = X.face(ref, i)
        if not X.is_basepoint(img):
            out.setdefault(img, []).append(ref)
    return {t: tuple(members) for t, members in out.items()}


@dataclass(frozen=True)
class FiberOrdering:
    level: int
    face_index: int
    target: SimplexRef
    order: tuple[SimplexRef, ...]  # ascending


class OrderingAssignment:
    """Per (level <= cutoff, face index): a total order for every fiber of
    d_i over a non-basepoint target."""

    def __init__(self, X: SimplicialSet, cutoff: int,
                 orders: dict[tuple[int, int, SimplexRef], tuple[SimplexRef, ...]]):
        self.X = X
        self.cutoff = cutoff
        self.orders = dict(orders)
        self._pos = {key: {ref: k for k, ref in enumerate(order)}
                     for key, order in self.orders.items()}
        for n in range(1, cutoff + 1):
            for i in range(n + 1):
                for target, fiber in fibers_of_face(X, n, i).items():
                    key = (n, i, target)
                    if key not in self.orders:
                        raise OrderingError(
                            f"assignment misses the fiber of d_{i} over "
                            f"{X.monotone_name(target)} at level {n}")
                    if sorted(self.orders[key]) != sorted(fiber):
                        raise OrderingError(
                            f"order at level {n}, d_{i}, target "
                            f"{X.monotone_name(target)} is not a permutation of the fiber")

    def order_of(self, level: int, i: int, target: SimplexRef) -> tuple[SimplexRef, ...]:
        return self.orders[(level, i, target)]

    def position(self, level: int, i: int, target: SimplexRef, ref: SimplexRef) -> int:
        return self._pos[(level, i, target)][ref]

    def fiber_orderings(self) -> list[FiberOrdering]:
        return [FiberOrdering(level, i, target, order)
                for (level, i, target), order in sorted(
                    self.orders.items(),
                    key=lambda kv: (kv[0][0], kv[0][1], kv[0][2]))]

    def describe(self) -> list[str]:
        lines = []
        for fo in self.fiber_orderings():
            if len(fo.order) < 2:
                continue
            chain = " < ".join(self.X.monotone_name(r) for r in fo.order)
            lines.append(f"level {fo.level}, d_{fo.face_index} over "
                         f"{self.X.monotone_name(fo.target)}: {chain}")
        return lines


def assignment_from_level_orders(X: SimplicialSet, level_orders: dict[int, tuple[SimplexRef, ...]],
                                 cutoff: int) -> OrderingAssignment:
    """Restrict per-level total orders on X_n \\ {*} to every fiber."""
    pos = {n: {ref: k for k, ref in enumerate(order)} for n, order in level_orders.items()}
    orders = {}
    for n in range(1, cutoff + 1):
        if n not in pos:
            raise OrderingError(f"level orders missing level {n}")
        for i in range(n + 1):
            for target, fiber in fibers_of_face(X, n, i).items():
                orders[(n, i, target)] = tuple(sorted(fiber, key=lambda r: pos[n][r]))
    return OrderingAssignment(X, cutoff, orders)


# ---------------------------------------------------------------------------
# composition-induced orders

def induced_compare(X: SimplicialSet, assignment: OrderingAssignment,
                    steps: tuple[int, ...], level: int,
                    x: SimplexRef, y: SimplexRef) -> int:
    """-1/0/+1 comparison of two fiber members in the order induced by the
    composition whose faces apply in the order listed in ``steps``.

    Two members separate either inside a single-step fiber (the chosen
    f-ordering decides) or strictly earlier in their downstream images (the
    remaining composition decides on the images).
    """
    if x == y:
        return 0
    if not steps:
        raise OrderingError("members of a fiber cannot differ on the empty composition")
    i = steps[0]
    fx, fy = X.face(x, i), X.face(y, i)
    if fx == fy:
        if X.is_basepoint(fx):
            raise OrderingError("induced order requested through a basepoint image")
        px = assignment.position(level, i, fx, x)
        py = assignment.position(level, i, fx, y)
        return -1 if px < py else 1
    return induced_compare(X, assignment, steps[1:], level - 1, fx, fy)


def composition_induced_order(X: SimplicialSet, assignment: OrderingAssignment,
                              steps: tuple[int, ...], level: int,
                              fiber) -> tuple[SimplexRef, ...]:
    """Sort a fiber of the composition (faces applied in ``steps`` order)."""
    import functools
    cmp = functools.cmp_to_key(
        lambda a, b: induced_compare(X, assignment, steps, level, a, b))
    return tuple(sorted(fiber, key=cmp))


def _composition_word_string(steps: tuple[int, ...]) -> str:
    """Render faces applied first-to-last as the usual right-to-left composite."""
    return " ".join(f"d{i}" for i in reversed(steps))


# ---------------------------------------------------------------------------
# witnesses

@dataclass(frozen=True)
class Witness:
    """A fiber plus two equal face-map factorizations whose induced ordering
    requirements clash.

    ``kind`` is 'absolute' when no total order at all satisfies both routes
    (certified by enumerating every order of the fiber), or 'assignment' when
    a concrete assignment's two induced orders disagree.
    """

    level: int
    target: SimplexRef
    fiber: tuple[SimplexRef, ...]
    steps_a: tuple[int, ...]
    steps_b: tuple[int, ...]
    kind: str
    explanation: str

    def factorization_strings(self) -> tuple[str, str]:
        return (_composition_word_string(self.steps_a), _composition_word_string(self.steps_b))

    def verify_equal_maps(self, X: SimplicialSet) -> bool:
        """Both factorizations act identically on the fiber and hit the
        (non-basepoint) target."""
        for ref in self.fiber:
            a = X.face_word(ref, self.steps_a)
            b = X.face_word(ref, self.steps_b)
            if a != b or a != self.target:
                return False
        return not X.is_basepoint(self.target)

    def reverify_unsat(self, X: SimplicialSet) -> bool:
        """Confirm by exhaustive enumeration that no total order of the fiber
        is inducible by both factorizations."""
        return not _joint_orders_exist(X, self.fiber, self.steps_a, self.steps_b)

    def describe(self, X: SimplicialSet) -> list[str]:
        fa, fb = self.factorization_strings()
        lines = [f"level {self.level} fiber over {X.monotone_name(self.target)} "
                 f"under {fa} = {fb}:",
                 "  " + ", ".join(X.monotone_name(r) for r in self.fiber),
                 "  " + self.explanation]
        return lines


def _route_blocks(X: SimplicialSet, fiber, first_step: int) -> list[tuple[SimplexRef, ...]]:
    groups: dict[SimplexRef, list[SimplexRef]] = {}
    for ref in fiber:
        groups.setdefault(X.face(ref, first_step), []).append(ref)
    return [tuple(v) for _, v in sorted(groups.items())]


def _joint_orders_exist(X: SimplicialSet, fiber, steps_a, steps_b) -> bool:
    """Is some total order of the fiber inducible by both two-step routes?

    A total order is inducible by a route exactly when every same-first-image
    block is an interval of it (step orders are otherwise free), so a small
    fiber can be settled by enumerating all |fiber|! orders.
    """
    blocks_a = [set(b) for b in _route_blocks(X, fiber, steps_a[0])]
    blocks_b = [set(b) for b in _route_blocks(X, fiber, steps_b[0])]

    def intervals_ok(order, blocks):
        pos = {r: k for k, r in enumerate(order)}
        for block in blocks:
            ps = sorted(pos[r] for r in block)
            if ps[-1] - ps[0] != len(ps) - 1:
                return False
        return True

    if len(fiber) > 7:
        raise OrderingError("fiber too large for exhaustive order enumeration")
    for order in permutations(fiber):
        if intervals_ok(order, blocks_a) and intervals_ok(order, blocks_b):
            return True
    return False


# ---------------------------------------------------------------------------
# the NNCMO check (adjacent identities) and the full-factorization oracle

def _adjacent_routes(n: int):
    """All pairs (steps_a, steps_b) realizing d_i d_j = d_{j-1} d_i from level n."""
    for j in range(1, n + 1):
        for i in range(j):
            yield (j, i), (i, j - 1)


def _two_step_fibers(X: SimplicialSet, n: int, steps):
    groups: dict[SimplexRef, list[SimplexRef]] = {}
    for ref in X.level_nonbase(n):
        img = X.face_word(ref, steps)
        if not X.is_basepoint(img):
            groups.setdefault(img, []).append(ref)
    return sorted(groups.items())


def check_nncmo(X: SimplicialSet, assignment: OrderingAssignment, cutoff: int) -> Witness | None:
    """Verify the multiplicative-ordering condition on all adjacent-identity
    pairs up to the cutoff; returns the first violating witness, or None.

    A cutoff below 2 has no two-step compositions and is trivially fine.
    """
    if cutoff > assignment.cutoff:
        raise OrderingError("assignment cutoff too small for the requested check")
    for n in range(2, cutoff + 1):
        for steps_a, steps_b in _adjacent_routes(n):
            for target, fiber in _two_step_fibers(X, n, steps_a):
                if len(fiber) < 2:
                    continue
                order_a = composition_induced_order(X, assignment, steps_a, n, fiber)
                order_b = composition_induced_order(X, assignment, steps_b, n, fiber)
                if order_a != order_b:
                    expl = ("induced orders disagree: "
                            + " < ".join(X.monotone_name(r) for r in order_a)
                            + "  versus  "
                            + " < ".join(X.monotone_name(r) for r in order_b))
                    return Witness(n, target, tuple(fiber), steps_a, steps_b,
                                   "assignment", expl)
    return None


def _face_words(n: int, length: int):
    """All compositions of ``length`` face maps from level n, as tuples in
    application order, keyed by the set of deleted positions (equal maps
    share a key)."""
    out: dict[frozenset, list[tuple[int, ...]]] = {}

    def rec(level, word, positions):
        if len(word) == length:
            deleted = frozenset(range(n + 1)) - frozenset(positions)
            out.setdefault(deleted, []).append(tuple(word))
            return
        for i in range(level + 1):
            rec(level - 1, word + [i], positions[:i] + positions[i + 1:])

    rec(n, [], list(range(n + 1)))
    return out


def check_nncmo_full(X: SimplicialSet, assignment: OrderingAssignment, cutoff: int) -> Witness | None:
    """Brute-force variant: compare induced orders across *all* pairs of equal
    face-map factorizations up to the cutoff, not just adjacent swaps."""
    for n in range(2, cutoff + 1):
        for length in range(2, n + 1):
            for _, words in sorted(_face_words(n, length).items(),
                                   key=lambda kv: sorted(kv[0])):
                if len(words) < 2:
                    continue
                words = sorted(words)
                base = words[0]
                base_fibers = _two_step_fibers(X, n, base)
                for other in words[1:]:
                    for target, fiber in base_fibers:
                        if len(fiber) < 2:
                            continue
                        oa = composition_induced_order(X, assignment, base, n, fiber)
                        ob = composition_induced_order(X, assignment, other, n, fiber)
                        if oa != ob:
                            expl = ("induced orders disagree: "
                                    + " < ".join(X.monotone_name(r) for r in oa)
                                    + "  versus  "
                                    + " < ".join(X.monotone_name(r) for r in ob))
                            return Witness(n, target, tuple(fiber), base, other,
                                           "assignment", expl)
    return None


# ---------------------------------------------------------------------------
# exhaustive search for an assignment

@dataclass(frozen=True)
class NncmoResult:
    verdict: str  # 'admits' | 'fails'
    assignment: OrderingAssignment | None = None
    witness: Witness | None = None
    nodes: int = 0

    @property
    def admits(self) -> bool:
        return self.verdict == "admits"


class _PairVars:
    """Precedence variables x_(fiber, a, b) meaning a < b, with equivalence
    constraints and transitivity propagation inside fibers."""

    def __init__(self):
        self.vars: list[tuple] = []
        self.index: dict[tuple, int] = {}
        self.adj: dict[int, list[tuple[int, int]]] = {}
        self.fiber_members: dict[tuple, tuple] = {}
        self.var_fiber: dict[int, tuple] = {}

    def add_fiber(self, key, members):
        self.fiber_members[key] = tuple(members)
        for a, b in combinations(members, 2):
            vid = len(self.vars)
            self.index[(key, a, b)] = vid
            self.vars.append((key, a, b))
            self.var_fiber[vid] = key

    def literal(self, key, a, b) -> tuple[int, int]:
        """(var id, sign): sign +1 if the var asserts a < b, else -1."""
        if (key, a, b) in self.index:
            return self.index[(key, a, b)], 1
        return self.index[(key, b, a)], -1

    def add_equiv(self, lit1, lit2):
        v1, s1 = lit1
        v2, s2 = lit2
        if v1 == v2:
            if s1 != s2:
                return False  # x == not x: immediate clash
            return True
        parity = s1 * s2
        self.adj.setdefault(v1, []).append((v2, parity))
        self.adj.setdefault(v2, []).append((v1, parity))
        return True


def search_nncmo(X: SimplicialSet, cutoff: int, node_limit: int = 500_000,
                 full_oracle: bool = False) -> NncmoResult:
    """Backtracking search over per-fiber total orders, encoded as pairwise
    precedence variables with equivalence propagation and transitivity.

    This is the brute-force oracle for the classification: it either finds an
    assignment (verified against ``check_nncmo`` before being returned) or
    certifies failure with a single-fiber witness.  An explicit node limit
    turns runaway searches into an ``InconclusiveSearch`` error rather than a
    wrong answer.
    """
    if cutoff < 2:
        orders = {}
        for n in range(1, cutoff + 1):
            for i in range(n + 1):
                for target, fiber in fibers_of_face(X, n, i).items():
                    orders[(n, i, target)] = fiber
        return NncmoResult("admits", OrderingAssignment(X, cutoff, orders))

    pv = _PairVars()
    fiber_lists: dict[tuple, tuple] = {}
    for n in range(1, cutoff + 1):
        for i in range(n + 1):
            for target, fiber in sorted(fibers_of_face(X, n, i).items()):
                key = (n, i, target)
                fiber_lists[key] = fiber
                if len(fiber) >= 2:
                    pv.add_fiber(key, fiber)

    def step_literal(n, first, second_key_steps, x, y):
        i = second_key_steps
        fx, fy = X.face(x, first), X.face(y, first)
        if fx == fy:
            return pv.literal((n, first, fx), x, y)
        return pv.literal((n - 1, i[0], i[1]), fx, fy)

    direct_clash = None
    constraint_sources = []
    for n in range(2, cutoff + 1):
        for steps_a, steps_b in _adjacent_routes(n):
            for target, fiber in _two_step_fibers(X, n, steps_a):
                if len(fiber) < 2:
                    continue
                constraint_sources.append((n, target, tuple(fiber), steps_a, steps_b))
                for x, y in combinations(fiber, 2):
                    lit_a = step_literal(n, steps_a[0], (steps_a[1], target), x, y)
                    lit_b = step_literal(n, steps_b[0], (steps_b[1], target), x, y)
                    if not pv.add_equiv(lit_a, lit_b):
                        direct_clash = (n, target, tuple(fiber), steps_a, steps_b)

    values: dict[int, int] = {}
    nodes = 0

    def propagate(vid, val, trail) -> bool:
        queue = [(vid, val)]
        while queue:
            v, b = queue.pop()
            if v in values:
                if values[v] != b:
                    return False
                continue
            values[v] = b
            trail.append(v)
            for w, parity in pv.adj.get(v, ()):
                queue.append((w, b if parity > 0 else 1 - b))
            # transitivity inside the fiber of v
            key = pv.var_fiber[v]
            members = pv.fiber_members[key]
            _, a, c = pv.vars[v]
            for m in members:
                if m in (a, c):
                    continue
                for (p, q, r) in ((a, c, m), (m, a, c), (a, m, c)):
                    # if p<q and q<r are known, force p<r
                    l1 = pv.literal(key, p, q)
                    l2 = pv.literal(key, q, r)
                    l3 = pv.literal(key, p, r)
                    v1 = values.get(l1[0])
                    v2 = values.get(l2[0])
                    if v1 is None or v2 is None:
                        continue
                    t1 = v1 if l1[1] > 0 else 1 - v1
                    t2 = v2 if l2[1] > 0 else 1 - v2
                    if t1 == 1 and t2 == 1:
                        want = 1 if l3[1] > 0 else 0
                        if l3[0] in values:
                            if values[l3[0]] != want:
                                return False
                        else:
                            queue.append((l3[0], want))
        return True

    satisfiable = direct_clash is None
    if satisfiable:
        order_of_vars = list(range(len(pv.vars)))
        decision_trail: list[tuple[int, int, list[int]]] = []
        idx = 0
        while idx < len(order_of_vars):
            vid = order_of_vars[idx]
            if vid in values:
                idx += 1
                continue
            nodes += 1
            if nodes > node_limit:
                raise InconclusiveSearch(
                    f"node limit {node_limit} exceeded at cutoff {cutoff}; "
                    "no verdict at this cutoff")
            trail: list[int] = []
            if propagate(vid, 1, trail):
                decision_trail.append((idx, 1, trail))
                idx += 1
                continue
            for v in trail:
                del values[v]
            trail = []
            if propagate(vid, 0, trail):
                decision_trail.append((idx, 0, trail))
                idx += 1
                continue
            for v in trail:
                del values[v]
            # backtrack
            while decision_trail:
                j, tried, tr = decision_trail.pop()
                for v in tr:
                    del values[v]
                if tried == 1:
                    nodes += 1
                    tr2: list[int] = []
                    if propagate(order_of_vars[j], 0, tr2):
                        decision_trail.append((j, 0, tr2))
                        idx = j + 1
                        break
                    for v in tr2:
                        del values[v]
            else:
                satisfiable = False
                break

    if satisfiable:
        orders = {}
        for key, fiber in fiber_lists.items():
            if len(fiber) < 2:
                orders[key] = fiber
                continue
            import functools

            def cmp(a, b, key=key):
                v, s = pv.literal(key, a, b)
                val = values[v] if s > 0 else 1 - values[v]
                return -1 if val == 1 else 1

            orders[key] = tuple(sorted(fiber, key=functools.cmp_to_key(cmp)))
        assignment = OrderingAssignment(X, cutoff, orders)
        bad = check_nncmo(X, assignment, cutoff)
        if bad is not None:
            raise OrderingError("internal error: search produced an assignment "
                                "that fails the consistency check")
        return NncmoResult("admits", assignment, nodes=nodes)

    # unsatisfiable: certify with a single locally-contradictory fiber
    for (n, target, fiber, steps_a, steps_b) in constraint_sources:
        if 2 <= len(fiber) <= 7 and not _joint_orders_exist(X, fiber, steps_a, steps_b):
            fa, fb = _composition_word_string(steps_a), _composition_word_string(steps_b)
            expl = (f"no total order of the fiber is inducible by both {fa} and {fb}: "
                    "the two block structures interleave")
            witness = Witness(n, target, fiber, steps_a, steps_b, "absolute", expl)
            return NncmoResult("fails", witness=witness, nodes=nodes)
    raise InconclusiveSearch(
        "orders are jointly unsatisfiable but no single-fiber witness exists "
        f"at cutoff {cutoff}")


# ---------------------------------------------------------------------------
# cyclic orderings and the fast classification

def cyclic_ordering(X: SimplicialSet, cutoff: int) -> dict[int, tuple[SimplexRef, ...]]:
    """Per-level total orders on X_n \\ {*} with the face-monotone property:
    sigma < tau implies d_i(sigma) <= d_i(tau) (basepoint counted minimal).

    The basepoint is the wrap point of the cyclic picture (it is both the
    all-0s and the all-1s word), so comparisons in which a face image hits the
    basepoint impose no constraint: such factors act on the coefficient module
    and never enter an induced-order comparison.

    Construction: degeneracies of 1-simplices come first, ordered by the
    input order of their base edge and then alphabetically by monotone binary
    word; degeneracies of non-basepoint vertices follow, by vertex input
    order.  The property is verified exhaustively up to the cutoff, and a
    failure raises ``CyclicOrderingUnavailable`` (some one-dimensional sets,
    e.g. a circle subdivided through an extra vertex, have no face-monotone
    order even though a multiplicative ordering exists via search).
    """
    if X.dimension() > 1:
        raise OrderingError("cyclic orderings are defined for one-dimensional sets only")
    edge_pos = {}
    vertex_pos = {}
    for idx, s in enumerate(X.simplices):
        if s.dim == 1:
            edge_pos[idx] = len(edge_pos)
        elif idx != X.basepoint:
            vertex_pos[idx] = len(vertex_pos)

    def key(ref: SimplexRef):
        base = X.simplices[ref.base]
        if base.dim == 1:
            return (0, edge_pos[ref.base], X.monotone_name(ref))
        return (1, vertex_pos[ref.base], "")

    orders = {n: tuple(sorted(X.level_nonbase(n), key=key)) for n in range(cutoff + 1)}

    for n in range(2, cutoff + 1):
        pos_below = {ref: k for k, ref in enumerate(orders[n - 1])}
        seq = orders[n]
        for a in range(len(seq)):
            for b in range(a + 1, len(seq)):
                for i in range(n + 1):
                    fa, fb = X.face(seq[a], i), X.face(seq[b], i)
                    if X.is_basepoint(fa) or X.is_basepoint(fb):
                        continue
                    if pos_below[fa] > pos_below[fb]:
                        raise CyclicOrderingUnavailable(
                            f"face-monotonicity fails at level {n}: "
                            f"{X.monotone_name(seq[a])} < {X.monotone_name(seq[b])} "
                            f"but d_{i} reverses them")
    return orders


def classify_nncmo(X: SimplicialSet, cutoff: int = 4) -> NncmoResult:
    """Theorem-backed classification: one-dimensional sets admit a
    multiplicative ordering (certificate constructed, cyclic when possible),
    higher-dimensional sets fail with the generic four-simplex witness."""
    problems = X.validate()
    if problems:
        raise OrderingError("invalid simplicial set: " + "; ".join(problems))
    if X.dimension() <= 1:
        try:
            orders = cyclic_ordering(X, cutoff)
            assignment = assignment_from_level_orders(X, orders, cutoff)
            bad = check_nncmo(X, assignment, cutoff)
            if bad is None:
                return NncmoResult("admits", assignment)
        except CyclicOrderingUnavailable:
            pass
        return search_nncmo(X, cutoff)
    # generic witness on the first nondegenerate simplex of minimal dim >= 2
    best = None
    for idx, s in enumerate(X.simplices):
        if s.dim >= 2 and (best is None or s.dim < X.simplices[best].dim):
            best = idx
    sigma = SimplexRef(best)
    d = X.simplices[best].dim
    level = d + 2
    fiber = tuple(sorted(SimplexRef(best, w) for w in ((2, 0), (3, 0), (3, 1), (2, 1))))
    steps_a, steps_b = (3, 1), (1, 2)  # d_1 d_3 = d_2 d_1
    witness = Witness(level, sigma, fiber, steps_a, steps_b, "absolute",
                      "the d_1 blocks and d_3 blocks of the four degeneracies interleave, "
                      "so no order is inducible by both routes")
    if not witness.verify_equal_maps(X) or not witness.reverify_unsat(X):
        raise OrderingError("internal error: generic witness failed verification")
    return NncmoResult("fails", witness=witness)


# ---------------------------------------------------------------------------
# action sites and classes

Site = tuple[int, SimplexRef, int]  # (level, simplex, face index)


@dataclass(frozen=True)
class ActionClass:
    class_id: str
    action_type: str  # 'left' | 'right' | 'lr' | 'untyped'
    sites: tuple[Site, ...]


@dataclass(frozen=True)
class ActionClassReport:
    cutoff: int
    classes: tuple[ActionClass, ...]
    notes: tuple[str, ...]

    def class_of_site(self, site: Site) -> ActionClass | None:
        for cls in self.classes:
            if site in cls.sites:
                return cls
        return None

    def by_id(self, class_id: str) -> ActionClass:
        for cls in self.classes:
            if cls.class_id == class_id:
                return cls
        raise OrderingError(f"unknown action class {class_id!r}")


_TYPING_NOTE = (
    "action typing reads an equal pair of face-map factorizations as: the "
    "factorization that kills the larger fiber member strictly first makes the "
    "class a left action, killing the smaller member first makes it a right "
    "action; classes are the finest identification of basepoint-hitting sites "
    "under the four coface compatibility rules")


def _union_sites(X: SimplicialSet, cutoff: int):
    parent: dict[Site, Site] = {}

    def find(s):
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb, key=_site_sort_key)] = min(ra, rb, key=_site_sort_key)

    def _site_sort_key(site):
        n, ref, i = site
        return (n, ref, i)

    sites = []
    for n in range(1, cutoff + 1):
        for ref in X.level_nonbase(n):
            for i in range(n + 1):
                if X.is_basepoint(X.face(ref, i)):
                    site = (n, ref, i)
                    parent[site] = site
                    sites.append(site)

    for n in range(2, cutoff + 1):
        for sigma in X.level_nonbase(n):
            faces = [X.face(sigma, i) for i in range(n + 1)]
            star = [X.is_basepoint(f) for f in faces]
            # (i): two basepoint faces of one simplex
            hit = [i for i in range(n + 1) if star[i]]
            for a in range(len(hit)):
                for b in range(a + 1, len(hit)):
                    union((n, sigma, hit[a]), (n, sigma, hit[b]))
            # (ii): the site transports along any non-basepoint face
            for j in range(1, n + 1):
                if not star[j]:
                    continue
                for i in range(n + 1):
                    if i == j or star[i]:
                        continue
                    omega = faces[i]
                    if X.is_basepoint(X.face(omega, j - 1)):
                        union((n, sigma, j), (n - 1, omega, j - 1))
            # (iii): two faces of a common simplex identify their sites
            for i in range(n + 1):
                for j in range(i + 1, n + 1):
                    omega, mu = faces[j], faces[i]
                    if star[j] or star[i]:
                        continue
                    if i <= n - 1 and X.is_basepoint(X.face(omega, i)) \
                            and X.is_basepoint(X.face(mu, j - 1)):
                        union((n - 1, omega, i), (n - 1, mu, j - 1))
            # (iv): same face index one level down
            for i in range(n + 1):
                if not star[i]:
                    continue
                for j in range(n + 1):
                    if j == i or star[j]:
                        continue
                    omega = faces[j]
                    if i <= n - 1 and X.is_basepoint(X.face(omega, i)):
                        union((n, sigma, i), (n - 1, omega, i))

    groups: dict[Site, list[Site]] = {}
    for s in sites:
        groups.setdefault(find(s), []).append(s)
    return [tuple(sorted(v, key=_site_sort_key)) for _, v in
            sorted(groups.items(), key=lambda kv: _site_sort_key(kv[0]))]


def _simulate_route(X: SimplicialSet, ref: SimplexRef, steps):
    """Images of ref along the steps; returns (images list incl. start,
    death step or None)."""
    imgs = [ref]
    death = None
    cur = ref
    for t, i in enumerate(steps, start=1):
        cur = X.face(cur, i)
        imgs.append(cur)
        if death is None and X.is_basepoint(cur):
            death = t
    return imgs, death


def classify_actions(X: SimplicialSet, cutoff: int = 4,
                     max_word_length: int = 4) -> ActionClassReport:
    """Partition the basepoint-hitting sites (simplex, face index) into
    classes under the coface compatibility rules, then type each class by a
    factorization search against the canonical ordering certificate.

    Sets of dimension >= 2 carry no multiplicative ordering, so their classes
    are reported untyped (only commutative coefficients apply there and any
    action of a commutative algebra obeys both laws).
    """
    notes = [_TYPING_NOTE]
    site_groups = _union_sites(X, cutoff)

    assignment = None
    if X.dimension() <= 1:
        res = classify_nncmo(X, cutoff)
        if res.admits:
            assignment = res.assignment
        else:
            notes.append("no multiplicative ordering found; classes left untyped")
    else:
        notes.append("set is not one-dimensional: no multiplicative ordering exists, "
                     "classes left untyped")

    site_to_group = {}
    for gi, group in enumerate(site_groups):
        for s in group:
            site_to_group[s] = gi
    evidence: dict[int, set[str]] = {gi: set() for gi in range(len(site_groups))}

    if assignment is not None:
        for n in range(2, cutoff + 1):
            members = X.level_nonbase(n)
            for length in range(2, min(n, max_word_length) + 1):
                for _, words in sorted(_face_words(n, length).items(),
                                       key=lambda kv: sorted(kv[0])):
                    if len(words) < 2:
                        continue
                    words = sorted(words)
                    for w1, w2 in combinations(words, 2):
                        for x, y in combinations(members, 2):
                            _collect_typing_evidence(
                                X, assignment, site_to_group, evidence,
                                n, x, y, w1, w2)

    classes = []
    for gi, group in enumerate(site_groups):
        ev = evidence[gi]
        if "left" in ev and "right" in ev:
            typ = "lr"
        elif "left" in ev:
            typ = "left"
        elif "right" in ev:
            typ = "right"
        else:
            typ = "untyped"
        n0, ref0, i0 = group[0]
        cid = f"d{i0}:{X.monotone_name(ref0)}"
        classes.append(ActionClass(cid, typ, group))
    return ActionClassReport(cutoff, tuple(classes), tuple(notes))


def _collect_typing_evidence(X, assignment, site_to_group, evidence,
                             n, x, y, w1, w2):
    """One evidence attempt: on one word the pair merges alive and the merged
    image later dies; on the other word the two members die at different
    steps.  The relative death order types the class of the death sites."""
    for merge_word, split_word in ((w1, w2), (w2, w1)):
        imgs_mx, death_mx = _simulate_route(X, x, merge_word)
        imgs_my, death_my = _simulate_route(X, y, merge_word)
        merge_t = None
        for t in range(1, len(merge_word) + 1):
            if imgs_mx[t] == imgs_my[t]:
                if not X.is_basepoint(imgs_mx[t]):
                    merge_t = t
                break
        if merge_t is None:
            continue
        merged_death = None
        for t in range(merge_t + 1, len(merge_word) + 1):
            if X.is_basepoint(imgs_mx[t]):
                merged_death = t
                break
        if merged_death is None:
            continue
        imgs_sx, death_sx = _simulate_route(X, x, split_word)
        imgs_sy, death_sy = _simulate_route(X, y, split_word)
        if death_sx is None or death_sy is None or death_sx == death_sy:
            continue
        site_merge = (n - merged_death + 1, imgs_mx[merged_death - 1],
                      merge_word[merged_death - 1])
        site_x = (n - death_sx + 1, imgs_sx[death_sx - 1], split_word[death_sx - 1])
        site_y = (n - death_sy + 1, imgs_sy[death_sy - 1], split_word[death_sy - 1])
        g = site_to_group.get(site_merge)
        if g is None or site_to_group.get(site_x) != g or site_to_group.get(site_y) != g:
            continue
        # order the pair by the fiber order at the merge step
        a, b = imgs_mx[merge_t - 1], imgs_my[merge_t - 1]
        level_at = n - merge_t + 1
        i_at = merge_word[merge_t - 1]
        target = imgs_mx[merge_t]
        pa = assignment.position(level_at, i_at, target, a)
        pb = assignment.position(level_at, i_at, target, b)
        smaller_is_x = pa < pb
        death_smaller = death_sx if smaller_is_x else death_sy
        death_larger = death_sy if smaller_is_x else death_sx
        if death_larger < death_smaller:
            evidence[g].add("left")
        elif death_smaller < death_larger:
            evidence[g].add("right")

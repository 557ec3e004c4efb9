"""Super vector spaces, graded linear maps and the Koszul sign rule."""

from dataclasses import dataclass

from . import linalg
from .scalars import Field, sign


@dataclass(frozen=True)
class SuperSpace:
    """Finite-dimensional Z/2-graded space with a named basis."""

    field: Field
    basis: tuple  # ((name, parity), ...)

    def __post_init__(self):
        basis = tuple((str(n), int(p)) for n, p in self.basis)
        object.__setattr__(self, "basis", basis)
        names = [n for n, _ in basis]
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise ValueError(f"duplicate basis name {dup!r}")
        for n, p in basis:
            if p not in (0, 1):
                raise ValueError(f"parity of {n!r} must be 0 or 1, got {p}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def dim(self):
        return len(self.basis)

    @property
    def names(self):
        return [n for n, _ in self.basis]

    @property
    def parities(self):
        return [p for _, p in self.basis]

    def parity(self, i):
        return self.basis[i][1]

    def name(self, i):
        return self.basis[i][0]

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown basis element {name!r}") from None

    def even(self):
        return [i for i, (_, p) in enumerate(self.basis) if p == 0]

    def odd(self):
        return [i for i, (_, p) in enumerate(self.basis) if p == 1]

    def vector_parity(self, v):
        """Parity of a nonzero homogeneous sparse vector, None if mixed."""
        ps = {self.basis[i][1] for i, c in v.items() if c != 0}
        if len(ps) == 1:
            return ps.pop()
        return None if ps else 0

    def fmt(self, v):
        F = self.field
        terms = [(i, c) for i, c in sorted(v.items()) if F(c) != 0]
        if not terms:
            return "0"
        out = []
        for i, c in terms:
            c = F(c)
            out.append(self.basis[i][0] if c == 1 else f"{F.fmt(c)}*{self.basis[i][0]}")
        return " + ".join(out)


def tensor_space(V, W):
    """V ⊗ W with basis (v_i, w_j) in source-major order."""
    if V.field != W.field:
        raise ValueError(f"field mismatch: {V.field} vs {W.field}")
    basis = tuple(
        (f"{a}⊗{b}", (p + q) % 2) for a, p in V.basis for b, q in W.basis
    )
    return SuperSpace(V.field, basis)


class GradedMap:
    """Linear map between super spaces, stored as sparse columns.

    Column ``j`` is the image of the ``j``-th source basis vector as a dict
    ``{row: coeff}``.  The even and odd parts are the entries that keep,
    respectively flip, parity; a map is homogeneous when one part is zero.
    """

    __slots__ = ("source", "target", "cols")

    def __init__(self, source, target, cols):
        if source.field != target.field:
            raise ValueError("field mismatch")
        F = source.field
        cols = tuple(F.clean(c) for c in cols)
        if len(cols) != source.dim:
            raise ValueError(f"expected {source.dim} columns, got {len(cols)}")
        for c in cols:
            for r in c:
                if not 0 <= r < target.dim:
                    raise ValueError(f"row index {r} out of range")
        self.source = source
        self.target = target
        self.cols = cols

    @property
    def field(self):
        return self.source.field

    @classmethod
    def from_matrix(cls, source, target, M):
        cols = [{i: M[i][j] for i in range(target.dim) if M[i][j] != 0} for j in range(source.dim)]
        return cls(source, target, cols)

    @classmethod
    def from_parts(cls, source, target, even, odd):
        """Assemble from even/odd matrices (rows = target, cols = source)."""
        F = source.field
        for name, part, want in (("even", even, 0), ("odd", odd, 1)):
            for i in range(target.dim):
                for j in range(source.dim):
                    if F(part[i][j]) != 0 and (target.parity(i) + source.parity(j)) % 2 != want:
                        raise ValueError(f"{name} part has entry ({i},{j}) of the wrong parity")
        M = [[F(even[i][j] + odd[i][j]) for j in range(source.dim)] for i in range(target.dim)]
        return cls.from_matrix(source, target, M)

    @classmethod
    def identity(cls, V):
        return cls(V, V, [{i: 1} for i in range(V.dim)])

    @classmethod
    def zero(cls, V, W):
        return cls(V, W, [{} for _ in range(V.dim)])

    def matrix(self):
        F = self.field
        M = [[F.zero] * self.source.dim for _ in range(self.target.dim)]
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                M[i][j] = x
        return M

    def _part(self, want):
        s, t = self.source, self.target
        cols = [
            {i: x for i, x in c.items() if (t.parity(i) + s.parity(j)) % 2 == want}
            for j, c in enumerate(self.cols)
        ]
        return GradedMap(s, t, cols)

    @property
    def even_part(self):
        return self._part(0)

    @property
    def odd_part(self):
        return self._part(1)

    @property
    def parity(self):
        """0 or 1 for homogeneous maps (the zero map counts as even), else None."""
        e = any(self.even_part.cols)
        o = any(self.odd_part.cols)
        if e and o:
            return None
        return 1 if o else 0

    def apply(self, v):
        F = self.field
        out = {}
        for j, c in v.items():
            for i, x in self.cols[j].items():
                out[i] = out.get(i, 0) + c * x
        return F.clean(out)

    def __call__(self, v):
        return self.apply(v)

    def __matmul__(self, other):
        if other.target != self.source:
            raise ValueError("composition of incompatible maps")
        return GradedMap(other.source, self.target, [self.apply(c) for c in other.cols])

    def __add__(self, other):
        self._check_same(other)
        cols = []
        for a, b in zip(self.cols, other.cols):
            d = dict(a)
            for k, v in b.items():
                d[k] = d.get(k, 0) + v
            cols.append(d)
        return GradedMap(self.source, self.target, cols)

    def __neg__(self):
        return GradedMap(self.source, self.target, [{k: -v for k, v in c.items()} for c in self.cols])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GradedMap(self.source, self.target, [{k: c * v for k, v in col.items()} for col in self.cols])

    def __eq__(self, other):
        return (
            isinstance(other, GradedMap)
            and self.source == other.source
            and self.target == other.target
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(tuple(sorted(c.items())) for c in self.cols)))

    def _check_same(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("maps have different source/target")

    def rank(self):
        return linalg.rank(self.matrix(), self.field, self.source.dim)

    def kernel(self):
        """Kernel basis as sparse dicts over the source basis."""
        F = self.field
        ns = linalg.nullspace(self.matrix(), F, self.source.dim)
        return [{i: x for i, x in enumerate(v) if x != 0} for v in ns]

    def __repr__(self):
        return f"GradedMap({self.source.dim} -> {self.target.dim}, parity={self.parity})"


def braiding(V, W):
    """The super-symmetry c(v ⊗ w) = (-1)^{|v||w|} w ⊗ v."""
    if V.field != W.field:
        raise ValueError(f"field mismatch: {V.field} vs {W.field}")
    dV, dW = V.dim, W.dim
    cols = []
    for i in range(dV):
        for j in range(dW):
            cols.append({j * dV + i: sign(V.parity(i) * W.parity(j))})
    return GradedMap(tensor_space(V, W), tensor_space(W, V), cols)


def tensor_map(f, g):
    """f ⊗ g with (f⊗g)(v⊗w) = (-1)^{|g||v|} f(v) ⊗ g(w) on homogeneous parts."""
    if f.field != g.field:
        raise ValueError(f"field mismatch: {f.field} vs {g.field}")
    V, W = f.source, g.source
    dW2 = g.target.dim
    cols = []
    for i in range(V.dim):
        pv = V.parity(i)
        for j in range(W.dim):
            pw = W.parity(j)
            col = {}
            for l, y in g.cols[j].items():
                odd_g = (g.target.parity(l) + pw) % 2
                s = sign(odd_g * pv)
                for k, x in f.cols[i].items():
                    key = k * dW2 + l
                    col[key] = col.get(key, 0) + s * x * y
            cols.append(col)
    return GradedMap(tensor_space(V, W), tensor_space(f.target, g.target), cols)


def solve_linear(constraints):
    """Common kernel of a list of maps sharing one source space.

    Each constraint ``f`` imposes ``f(x) = 0`` on the unknown vector ``x``.
    Returns the reduced-echelon basis of the solution space as sparse dicts.
    """
    if not constraints:
        raise ValueError("need at least one constraint")
    src = constraints[0].source
    F = src.field
    rows = []
    for f in constraints:
        if f.source != src:
            raise ValueError("constraints must share the unknown space")
        if f.field != F:
            raise ValueError("field mismatch")
        rows.extend(f.matrix())
    ns = linalg.nullspace(rows, F, src.dim)
    return [{i: x for i, x in enumerate(v) if x != 0} for v in ns]

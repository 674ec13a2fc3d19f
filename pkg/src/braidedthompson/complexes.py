"""Finite abstract simplicial complexes with exact integer homology.

Complexes are stored by their maximal faces over a fixed ambient vertex
set 0..V-1 (a vertex belongs to the complex iff it spans a face, so an
ambient id may be unused, e.g. after passing to a full subcomplex).
Reduced homology is computed from the augmented boundary matrices via
Smith normal form over Python integers, so torsion is exact and there is
no overflow.  Orientation: faces are ordered by ascending vertex id and
boundary signs alternate accordingly.

Connectivity is only ever certified HOMOLOGICALLY here: "homology
n-connected" means vanishing reduced homology through degree n; the
fundamental group is not decided.

Also provided: the d-matching complexes of linear and cyclic graphs
(vertex id v is the arc with initial position v+1), link/star/join,
the mutual link of two vertices, a weak Cohen-Macaulay checker, a
complete-join checker, and discrete-Morse machinery (descending links,
sublevel filtrations, the relative-homology conclusion of the Morse
lemma).
"""

from __future__ import annotations

from itertools import combinations, product


class SimplicialComplex:
    __slots__ = ("vertices", "maximal_faces", "_faces")

    def __init__(self, vertices, maximal_faces=()):
        if vertices < 0:
            raise ValueError("vertex count must be >= 0")
        cleaned = set()
        for f in maximal_faces:
            f = tuple(sorted(set(f)))
            if not f:
                continue
            if f[0] < 0 or f[-1] >= vertices:
                raise ValueError("face %r out of vertex range 0..%d" % (f, vertices - 1))
            cleaned.add(f)
        # drop faces contained in others
        maximal = {f for f in cleaned
                   if not any(f != g and set(f) <= set(g) for g in cleaned)}
        self.vertices = vertices
        self.maximal_faces = frozenset(maximal)
        self._faces = None

    @classmethod
    def empty(cls, vertices=0):
        return cls(vertices, ())

    @classmethod
    def simplex(cls, n_vertices):
        """The full simplex on n_vertices vertices."""
        return cls(n_vertices, (tuple(range(n_vertices)),))

    @classmethod
    def sphere(cls, n):
        """The boundary of the (n+1)-simplex, a combinatorial n-sphere."""
        verts = tuple(range(n + 2))
        return cls(n + 2, combinations(verts, n + 1))

    @property
    def faces(self):
        """All nonempty faces (downward closure of the maximal ones)."""
        if self._faces is None:
            out = set()
            for f in self.maximal_faces:
                for k in range(1, len(f) + 1):
                    out.update(combinations(f, k))
            self._faces = frozenset(out)
        return self._faces

    def faces_of_dim(self, p):
        return sorted(f for f in self.faces if len(f) == p + 1)

    @property
    def dim(self):
        if not self.maximal_faces:
            return -1
        return max(len(f) for f in self.maximal_faces) - 1

    def has_face(self, f):
        return tuple(sorted(set(f))) in self.faces

    def vertex_set(self):
        return {f[0] for f in self.faces if len(f) == 1}

    def is_empty(self):
        return not self.maximal_faces

    def face_counts(self):
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[len(f) - 1] += 1
        return counts

    def euler_characteristic(self):
        return sum((-1) ** p * c for p, c in enumerate(self.face_counts()))

    def full_subcomplex(self, keep):
        """Faces spanned by the vertex subset `keep`; ambient ids kept."""
        keep = set(keep)
        faces = set()
        for f in self.maximal_faces:
            g = tuple(v for v in f if v in keep)
            if g:
                faces.add(g)
        return SimplicialComplex(self.vertices, faces)

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.vertices == other.vertices
                and self.maximal_faces == other.maximal_faces)

    def __hash__(self):
        return hash((self.vertices, self.maximal_faces))

    def __repr__(self):
        return "SimplicialComplex(%d, %d maximal faces, dim %d)" % (
            self.vertices, len(self.maximal_faces), self.dim)

    def to_json_dict(self):
        return {"vertices": self.vertices,
                "maximal_faces": sorted([list(f) for f in self.maximal_faces])}

    @classmethod
    def from_json_dict(cls, data):
        return cls(data["vertices"], data["maximal_faces"])


# -- link, star, join, mutual link ------------------------------------------


def link(k: SimplicialComplex, sigma) -> SimplicialComplex:
    sigma = tuple(sorted(set(sigma)))
    if not k.has_face(sigma):
        raise ValueError("%r is not a face" % (sigma,))
    s = set(sigma)
    faces = set()
    for f in k.faces:
        if s & set(f):
            continue
        if k.has_face(tuple(sorted(set(f) | s))):
            faces.add(f)
    return SimplicialComplex(k.vertices, faces)


def star(k: SimplicialComplex, sigma) -> SimplicialComplex:
    """The closed star: all faces contained in a face containing sigma."""
    sigma = tuple(sorted(set(sigma)))
    if not k.has_face(sigma):
        raise ValueError("%r is not a face" % (sigma,))
    s = set(sigma)
    faces = {f for f in k.maximal_faces if s <= set(f)}
    return SimplicialComplex(k.vertices, faces)


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join on the disjoint union of the vertex sets (the
    second complex is shifted by k1.vertices)."""
    off = k1.vertices
    m1 = list(k1.maximal_faces) or [()]
    m2 = [tuple(v + off for v in f) for f in k2.maximal_faces] or [()]
    faces = set()
    for a in m1:
        for b in m2:
            if a or b:
                faces.add(tuple(sorted(a + b)))
    return SimplicialComplex(k1.vertices + k2.vertices, faces)


def mutual_link(k: SimplicialComplex, x: int, y: int) -> SimplicialComplex:
    """Lk(x) intersected with Lk(y), the complex seen from both vertices."""
    for v in (x, y):
        if not k.has_face((v,)):
            raise ValueError("%d is not a vertex" % v)
    if x == y:
        return link(k, (x,))
    lx, ly = link(k, (x,)), link(k, (y,))
    faces = lx.faces & ly.faces
    return SimplicialComplex(k.vertices, faces)


# -- integer Smith normal form and homology ----------------------------------


def smith_invariants(rows):
    """Invariant factors (positive, each dividing the next) of an integer
    matrix given as a list of row lists.  Arbitrary precision."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    res = []
    t = 0
    while t < m and t < n:
        # smallest nonzero entry as pivot
        piv = None
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        pi, pj = piv
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            # clear the pivot column
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            if any(a[i][t] for i in range(t + 1, m)):
                # a smaller remainder appeared; promote it
                for i in range(t + 1, m):
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        break
                continue
            # clear the pivot row
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
            if any(a[t][j] for j in range(t + 1, n)):
                for j in range(t + 1, n):
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        break
                continue
            break
        # enforce divisibility of the remaining block by the pivot
        d = abs(a[t][t])
        culprit = None
        for i in range(t + 1, m):
            row = a[i]
            for j in range(t + 1, n):
                if row[j] % d:
                    culprit = i
                    break
            if culprit is not None:
                break
        if culprit is not None:
            a[t] = [x + y for x, y in zip(a[t], a[culprit])]
            continue
        res.append(d)
        t += 1
    return res


class HomologyReport:
    """Reduced integer homology, degree by degree: free rank plus the
    list of torsion coefficients.  Degree -1 is included (it is Z for the
    empty complex)."""

    __slots__ = ("betti", "torsion", "face_counts")

    def __init__(self, betti, torsion, face_counts):
        self.betti = dict(betti)
        self.torsion = {p: tuple(t) for p, t in torsion.items() if t}
        self.face_counts = list(face_counts)

    def betti_number(self, p):
        return self.betti.get(p, 0)

    def torsion_coefficients(self, p):
        return self.torsion.get(p, ())

    def is_zero_through(self, n):
        """True iff reduced homology vanishes in all degrees <= n."""
        for p, b in self.betti.items():
            if p <= n and b:
                return False
        for p, t in self.torsion.items():
            if p <= n and t:
                return False
        return True

    def euler_characteristic(self):
        """Unreduced Euler characteristic recovered from the Betti
        numbers; torsion does not contribute."""
        return 1 + sum((-1 if p % 2 else 1) * b for p, b in self.betti.items())

    def euler_consistent(self):
        chi = sum((-1) ** p * c for p, c in enumerate(self.face_counts))
        return chi == self.euler_characteristic()

    def to_json_dict(self):
        degs = sorted(set(self.betti) | set(self.torsion))
        return {"reduced_homology": [
            {"degree": p,
             "betti": self.betti.get(p, 0),
             "torsion": list(self.torsion.get(p, ()))}
            for p in degs]}

    def __repr__(self):
        parts = []
        for p in sorted(set(self.betti) | set(self.torsion)):
            b = self.betti.get(p, 0)
            t = self.torsion.get(p, ())
            if b or t:
                parts.append("H~_%d = Z^%d%s" % (
                    p, b, "".join(" + Z/%d" % x for x in t)))
        return "HomologyReport(%s)" % ("; ".join(parts) or "trivial")


def _boundary_matrix(lower, upper):
    """Matrix of the boundary map from the span of `upper` (p-faces) to
    the span of `lower` ((p-1)-faces), lexicographic orientation."""
    index = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for drop in range(len(f)):
            sub = f[:drop] + f[drop + 1:]
            rows[index[sub]][j] += (-1) ** drop
    return rows


def reduced_homology(k: SimplicialComplex) -> HomologyReport:
    by_dim = {}
    for f in k.faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort()
    top = k.dim
    # augmented complex: C_{-1} = Z
    ranks = {}
    invs = {}
    n_faces = {p: len(by_dim.get(p, [])) for p in range(-1, top + 1)}
    n_faces[-1] = 1
    for p in range(0, top + 1):
        if p == 0:
            mat = [[1] * n_faces[0]] if n_faces[0] else [[]]
        else:
            mat = _boundary_matrix(by_dim.get(p - 1, []), by_dim.get(p, []))
        inv = smith_invariants(mat) if n_faces[p] else []
        invs[p] = inv
        ranks[p] = len(inv)
    ranks[top + 1] = 0
    invs[top + 1] = []
    betti = {}
    torsion = {}
    betti[-1] = 1 - ranks.get(0, 0)
    for p in range(0, top + 1):
        betti[p] = n_faces[p] - ranks[p] - ranks.get(p + 1, 0)
        torsion[p] = [d for d in invs.get(p + 1, []) if d > 1]
    counts = [n_faces.get(p, 0) for p in range(0, top + 1)]
    return HomologyReport(betti, torsion, counts)


def relative_homology(k: SimplicialComplex, sub: SimplicialComplex):
    """Integer homology of the pair (k, sub): chains on faces of k not in
    sub, boundary projected.  Returns a HomologyReport (no degree -1)."""
    if not sub.faces <= k.faces:
        raise ValueError("second complex is not a subcomplex")
    excl = sub.faces
    by_dim = {}
    for f in k.faces:
        if f not in excl:
            by_dim.setdefault(len(f) - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort()
    top = max(by_dim) if by_dim else -1
    ranks = {}
    invs = {}
    for p in range(0, top + 2):
        lower = by_dim.get(p - 1, [])
        upper = by_dim.get(p, [])
        if not upper or not lower:
            invs[p] = []
            ranks[p] = 0
            continue
        idx = {f: i for i, f in enumerate(lower)}
        rows = [[0] * len(upper) for _ in lower]
        for j, f in enumerate(upper):
            for drop in range(len(f)):
                g = f[:drop] + f[drop + 1:]
                if g in idx:
                    rows[idx[g]][j] += (-1) ** drop
        invs[p] = smith_invariants(rows)
        ranks[p] = len(invs[p])
    betti = {}
    torsion = {}
    for p in range(0, top + 1):
        n_p = len(by_dim.get(p, []))
        betti[p] = n_p - ranks.get(p, 0) - ranks.get(p + 1, 0)
        torsion[p] = [d for d in invs.get(p + 1, []) if d > 1]
    counts = [len(by_dim.get(p, [])) for p in range(0, top + 1)]
    return HomologyReport(betti, torsion, counts)


# -- matching complexes -------------------------------------------------------


def d_matching_linear(d: int, m: int) -> SimplicialComplex:
    """Disjoint systems of intervals [p, p+d-1] inside the path on m
    vertices.  Complex vertex v is the interval with initial position
    v+1; there are m-d+1 of them (none if m < d)."""
    if d < 2 or m < 1:
        raise ValueError("need d >= 2 and m >= 1")
    nv = max(0, m - d + 1)
    faces = []

    def grow(chosen, next_start):
        if chosen:
            faces.append(tuple(v - 1 for v in chosen))
        for p in range(next_start, m - d + 2):
            grow(chosen + [p], p + d)

    grow([], 1)
    return SimplicialComplex(nv, faces)


def d_matching_cyclic(d: int, m: int) -> SimplicialComplex:
    """Same over the cycle on m vertices: intervals wrap modulo m and a
    face is a set of intervals with pairwise disjoint supports."""
    if d < 2 or m < 1:
        raise ValueError("need d >= 2 and m >= 1")
    if m < d:
        return SimplicialComplex(0)
    supports = {}
    for p in range(1, m + 1):
        supports[p] = frozenset((p - 1 + t) % m for t in range(d))
    faces = []
    starts = list(range(1, m + 1))

    def grow(chosen, used, idx):
        if chosen:
            faces.append(tuple(v - 1 for v in chosen))
        for i in range(idx, len(starts)):
            p = starts[i]
            if used & supports[p]:
                continue
            grow(chosen + [p], used | supports[p], i + 1)

    grow([], frozenset(), 0)
    return SimplicialComplex(m, faces)


def restrict_initial(k: SimplicialComplex, z) -> SimplicialComplex:
    """Full subcomplex of a matching complex on the arcs whose initial
    position lies in z (positions are 1-based, vertex ids 0-based)."""
    z = set(z)
    if not z <= set(range(1, k.vertices + 1)):
        raise ValueError("initial positions must lie in 1..%d" % k.vertices)
    return k.full_subcomplex({p - 1 for p in z})


def simplex_counts(d: int, m: int):
    """Face counts of the linear d-matching complex, by dimension."""
    return d_matching_linear(d, m).face_counts()


# -- weak Cohen-Macaulay and complete joins -----------------------------------


def wcm_violation(k: SimplicialComplex, n: int):
    """First failure of homology-wCM of dimension n, or None.

    Checks vanishing reduced homology of the complex through degree n-1
    and of every p-face link through degree n-p-2.
    """
    if not reduced_homology(k).is_zero_through(n - 1):
        return "complex is not homology %d-connected" % (n - 1)
    for f in sorted(k.faces, key=lambda f: (len(f), f)):
        p = len(f) - 1
        if n - p - 2 < -1:
            continue
        if not reduced_homology(link(k, f)).is_zero_through(n - p - 2):
            return "link of %r is not homology %d-connected" % (f, n - p - 2)
    return None


def is_homology_wcm(k: SimplicialComplex, n: int) -> bool:
    return wcm_violation(k, n) is None


def complete_join_check(source: SimplicialComplex, target: SimplicialComplex,
                        vertex_map) -> bool:
    """Check that the simplicial map source -> target given by
    `vertex_map` (target vertex per source vertex) is a complete join:
    surjective, injective on every simplex, and every simplex preimage is
    the join of its vertex fibers.  Raises if the map is not simplicial.
    """
    vmap = dict(enumerate(vertex_map)) if not isinstance(vertex_map, dict) else dict(vertex_map)
    for v in source.vertex_set():
        if v not in vmap:
            raise ValueError("vertex %d has no image" % v)
        if not target.has_face((vmap[v],)):
            raise ValueError("image of vertex %d is not a vertex of the target" % v)
    for f in source.maximal_faces:
        img = tuple(sorted({vmap[v] for v in f}))
        if not target.has_face(img):
            raise ValueError("map is not simplicial: %r -> %r" % (f, img))
    # simplexwise injectivity
    for f in source.maximal_faces:
        if len({vmap[v] for v in f}) != len(f):
            return False
    fibers = {}
    for v in source.vertex_set():
        fibers.setdefault(vmap[v], []).append(v)
    # surjectivity on vertices
    if set(fibers) != target.vertex_set():
        return False
    # every transversal of fibers over a face of the target is a face
    for f in target.faces:
        for combo in product(*[fibers[w] for w in f]):
            if not source.has_face(combo):
                return False
    return True


def duplicated_cover(k: SimplicialComplex):
    """The double cover used as a stock complete join: each vertex v is
    duplicated into 2v and 2v+1, faces lift in all combinations.
    Returns (cover, vertex_map)."""
    faces = []
    for f in k.maximal_faces:
        for eps in product((0, 1), repeat=len(f)):
            faces.append(tuple(2 * v + e for v, e in zip(f, eps)))
    cover = SimplicialComplex(2 * k.vertices, faces)
    vmap = {w: w // 2 for w in range(2 * k.vertices)}
    return cover, vmap


# -- discrete Morse machinery -------------------------------------------------


class HeightFunction:
    """Integer heights on the ambient vertices.  Valid for a complex iff
    every face has a unique maximizing vertex (equivalently no edge is
    level)."""

    __slots__ = ("heights",)

    def __init__(self, heights):
        self.heights = dict(heights) if isinstance(heights, dict) else dict(enumerate(heights))

    def __call__(self, v):
        return self.heights[v]

    def is_valid_for(self, k: SimplicialComplex) -> bool:
        for f in k.faces:
            if len(f) == 2 and self.heights[f[0]] == self.heights[f[1]]:
                return False
        return True

    def levels(self, k: SimplicialComplex):
        return sorted({self.heights[v] for v in k.vertex_set()})


def sublevel(k: SimplicialComplex, h: HeightFunction, t: int, strict=False) -> SimplicialComplex:
    keep = {v for v in range(k.vertices)
            if v in h.heights and (h.heights[v] < t if strict else h.heights[v] <= t)}
    return k.full_subcomplex(keep)


def morse_descending_link(k: SimplicialComplex, h: HeightFunction, v: int) -> SimplicialComplex:
    """Link of v in the sublevel complex at h(v); with a valid height
    function all its vertices lie strictly below v."""
    if not h.is_valid_for(k):
        raise ValueError("invalid height function: some cell has no unique maximum")
    if not k.has_face((v,)):
        raise ValueError("%d is not a vertex" % v)
    hv = h(v)
    below = sublevel(k, h, hv)
    return link(below, (v,))


def morse_check(k: SimplicialComplex, h: HeightFunction, t: int, kk: int) -> bool:
    """The homological Morse lemma at level t: IF every descending link
    of a height-t vertex has vanishing reduced homology through degree
    kk-1, THEN the pair (K^{<=t}, K^{<t}) has vanishing homology through
    degree kk.  Returns the truth of that implication."""
    if not h.is_valid_for(k):
        raise ValueError("invalid height function: some cell has no unique maximum")
    level_vertices = [v for v in k.vertex_set() if h(v) == t]
    for v in level_vertices:
        if not reduced_homology(morse_descending_link(k, h, v)).is_zero_through(kk - 1):
            return True  # hypothesis fails, implication holds vacuously
    below = sublevel(k, h, t)
    strictly = sublevel(k, h, t, strict=True)
    rel = relative_homology(below, strictly)
    return rel.is_zero_through(kk)

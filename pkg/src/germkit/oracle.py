"""Brute-force verification substrate over prime fields F_q.

Everything here is exhaustive or closed-form over a finite field, with
two independent routes per quantity so the closed forms elsewhere in the
package are checked against raw enumeration:

* coset counts: the orbit of the standard flag of shape lam under
  GL_n(F_q) is enumerated exhaustively (every coset touched exactly
  once) and compared with the group-order quotient |GL_n| / |P_lam|;

* Jordan types: the partition of a nilpotent matrix is read off the
  kernel-dimension jumps rank X^(i-1) - rank X^i;

* depth-one character multiplicities: for partitions lam, mu of n, the
  multiplicity m(lam, mu) of the depth-one congruence character
  attached to the block-shift matrix A_lam in the functions on the
  P_mu-cosets equals

      #{k in GL_n(F_q) : k A_lam k^(-1) in n_mu(F_q)} / |P_mu(F_q)|,

  where n_mu is the strictly upper block-triangular algebra of shape mu.
  Derivation: over a local division algebra with uniformizer p and
  residue field F_q, the character 1+x -> psi(trd(A_lam p^(1-2j) x)) of
  the j-th congruence subgroup is trivial on k^(-1)(1 + p_mu(P^(2j-1)))k
  exactly when the reduced trace pairs A_lam against the conjugate of
  p_mu(O) into the maximal ideal, which only depends on the residue
  matrices and says that k A_lam k^(-1) is trace-orthogonal to
  p_mu(F_q), i.e. lies in n_mu(F_q).  At depth j = 1 the exponents
  2j-1 and j coincide, so this residue condition is the full triviality
  condition, not just a necessary one; the set of such k is stable
  under left multiplication by P_mu(F_q) (which normalizes n_mu), so
  the division is exact.  The additive character psi never needs to be
  constructed.  Verification at depths j >= 2 would require matrix
  groups over O/P^j and is out of scope.

The oracle works over prime q only, so all arithmetic is plain modular
integer arithmetic.  Every enumeration is bounded by an element cap
(default 10**7) counting the items actually streamed: q^(n^2) matrices
for group streaming, the orbit size for flag enumeration.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator

from .partitions import Partition, d_of, enumerate_partitions

DEFAULT_CAP = 10**7


class OracleBoundError(ValueError):
    """The requested enumeration exceeds the element cap."""


class OracleConsistencyError(RuntimeError):
    """Two independent routes disagreed; this signals a bug, not bad input."""


def _check_prime(q: int) -> None:
    if q < 2 or any(q % k == 0 for k in range(2, int(q**0.5) + 1)):
        raise ValueError(f"the oracle works over prime fields only, got q = {q}")


# ---------------------------------------------------------------------------
# raw matrix kernels (rows are tuples of ints reduced mod q)


def _mat_mul(a, b, q):
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % q for col in bt) for row in a)


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _rank(rows, q):
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] % q), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], q - 2, q)
        mat[rank] = [(x * inv) % q for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(x - f * y) % q for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def _det(rows, q):
    mat = [list(r) for r in rows]
    n = len(mat)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] % q), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det = (det * mat[col][col]) % q
        inv = pow(mat[col][col], q - 2, q)
        for r in range(col + 1, n):
            if mat[r][col]:
                f = (mat[r][col] * inv) % q
                mat[r] = [(x - f * y) % q for x, y in zip(mat[r], mat[col])]
    return det % q


def _inverse(rows, q):
    n = len(rows)
    mat = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] % q), None)
        if pivot is None:
            return None
        mat[col], mat[pivot] = mat[pivot], mat[col]
        inv = pow(mat[col][col], q - 2, q)
        mat[col] = [(x * inv) % q for x in mat[col]]
        for r in range(n):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(x - f * y) % q for x, y in zip(mat[r], mat[col])]
    return tuple(tuple(row[n:]) for row in mat)


def _rref(rows, q):
    """Canonical reduced row echelon form; zero rows dropped."""
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] % q), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], q - 2, q)
        mat[rank] = [(x * inv) % q for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(x - f * y) % q for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return tuple(tuple(r) for r in mat[:rank])


# ---------------------------------------------------------------------------
# public matrix type


class FqMatrix:
    """A dense matrix over the prime field F_q, entries reduced mod q."""

    __slots__ = ("q", "rows")

    def __init__(self, q: int, rows: Iterable[Iterable[int]]):
        _check_prime(q)
        rows = tuple(tuple(int(x) % q for x in row) for row in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must be nonempty and of equal length")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("FqMatrix is immutable")

    @classmethod
    def zero(cls, n: int, q: int) -> "FqMatrix":
        return cls(q, ((0,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int, q: int) -> "FqMatrix":
        return cls(q, _identity(n))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def _require_square(self) -> None:
        if self.nrows != self.ncols:
            raise ValueError("operation requires a square matrix")

    def __eq__(self, other) -> bool:
        return isinstance(other, FqMatrix) and self.q == other.q and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.q, self.rows))

    def __repr__(self) -> str:
        return f"FqMatrix(q={self.q}, rows={[list(r) for r in self.rows]})"

    def __mul__(self, other: "FqMatrix") -> "FqMatrix":
        if not isinstance(other, FqMatrix):
            return NotImplemented
        if self.q != other.q or self.ncols != other.nrows:
            raise ValueError("incompatible matrices")
        return FqMatrix(self.q, _mat_mul(self.rows, other.rows, self.q))

    def det(self) -> int:
        self._require_square()
        return _det(self.rows, self.q)

    def rank(self) -> int:
        return _rank(self.rows, self.q)

    def inverse(self) -> "FqMatrix":
        self._require_square()
        inv = _inverse(self.rows, self.q)
        if inv is None:
            raise ZeroDivisionError("matrix is not invertible")
        return FqMatrix(self.q, inv)

    def power(self, k: int) -> "FqMatrix":
        self._require_square()
        if k < 0:
            raise ValueError("negative powers are not supported")
        acc = _identity(self.nrows)
        for _ in range(k):
            acc = _mat_mul(acc, self.rows, self.q)
        return FqMatrix(self.q, acc)

    def is_nilpotent(self) -> bool:
        self._require_square()
        n = self.nrows
        acc = self.rows
        zero = tuple((0,) * n for _ in range(n))
        for _ in range(n - 1):
            if acc == zero:
                return True
            acc = _mat_mul(acc, self.rows, self.q)
        return acc == zero


class ParabolicShape:
    """Index predicates for the block triangular algebras of shape lam.

    Position (i, j), zero-based, lies in p_lam when block(i) <= block(j)
    and in the nilradical n_lam when block(i) < block(j); the remaining
    positions form the opposite nilradical.
    """

    __slots__ = ("lam", "_block")

    def __init__(self, lam: Partition):
        block = []
        for b, size in enumerate(lam):
            block.extend([b] * size)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "_block", tuple(block))

    def __setattr__(self, name, value):
        raise AttributeError("ParabolicShape is immutable")

    def block_of(self, i: int) -> int:
        return self._block[i]

    def in_p(self, i: int, j: int) -> bool:
        return self._block[i] <= self._block[j]

    def in_n(self, i: int, j: int) -> bool:
        return self._block[i] < self._block[j]

    @property
    def nilradical_dim(self) -> int:
        n = self.lam.n
        return sum(1 for i in range(n) for j in range(n) if self.in_n(i, j))

    def nilradical_contains(self, mat: FqMatrix) -> bool:
        n = self.lam.n
        rows = mat.rows
        return all(rows[i][j] == 0 for i in range(n) for j in range(n) if not self.in_n(i, j))


# ---------------------------------------------------------------------------
# group orders


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def parabolic_order(lam: Partition, q: int) -> int:
    """|P_lam(F_q)| = q^(d_lam) * prod_i |GL_{lam_i}(F_q)|."""
    out = q ** d_of(lam)
    for part in lam:
        out *= gl_order(part, q)
    return out


# ---------------------------------------------------------------------------
# Jordan types


def build_A_lambda(lam: Partition, q: int) -> FqMatrix:
    """The 0/1 block-shift matrix of shape lam.

    It kills the first lam_1 basis vectors and maps each later block
    onto the previous one (e_{lam_1+...+lam_{i-1}+j} to
    e_{lam_1+...+lam_{i-2}+j}), so the kernel of its i-th power is
    spanned by the first lam_1+...+lam_i basis vectors and its Jordan
    type is exactly lam.
    """
    n = lam.n
    rows = [[0] * n for _ in range(n)]
    starts = [0]
    for part in lam:
        starts.append(starts[-1] + part)
    for i in range(1, len(lam)):
        for j in range(lam[i]):
            rows[starts[i - 1] + j][starts[i] + j] = 1
    return FqMatrix(q, rows)


def nilpotent_partition(X: FqMatrix) -> Partition:
    """Jordan type of a nilpotent matrix via kernel-dimension jumps.

    lam_i = dim Ker X^i - dim Ker X^(i-1) = rank X^(i-1) - rank X^i.
    Raises on non-nilpotent input.
    """
    X._require_square()
    n = X.nrows
    q = X.q
    ranks = [n]
    acc = _identity(n)
    for _ in range(n):
        acc = _mat_mul(acc, X.rows, q)
        ranks.append(_rank(acc, q))
    if ranks[-1] != 0:
        raise ValueError("matrix is not nilpotent (X^n != 0)")
    jumps = [ranks[i] - ranks[i + 1] for i in range(n) if ranks[i] - ranks[i + 1] > 0]
    lam = Partition(jumps)
    if lam.n != n:
        raise OracleConsistencyError(f"kernel jumps {jumps} do not sum to {n}")
    return lam


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _primitive_root(q: int) -> int:
    if q == 2:
        return 1
    for g in range(2, q):
        seen, x = set(), 1
        for _ in range(q - 1):
            x = (x * g) % q
            seen.add(x)
        if len(seen) == q - 1:
            return g
    raise ValueError(f"no primitive root mod {q}")


def _gl_generators(n: int, q: int):
    """Elementary transvections plus a primitive diagonal generate GL_n(F_q)."""
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            rows = [list(r) for r in _identity(n)]
            rows[i][j] = 1
            gens.append(tuple(tuple(r) for r in rows))
    g = _primitive_root(q)
    if g != 1:
        rows = [list(r) for r in _identity(n)]
        rows[0][0] = g
        gens.append(tuple(tuple(r) for r in rows))
    return gens


def iter_matrices(n: int, q: int, cap: int = DEFAULT_CAP) -> Iterator[tuple]:
    """Stream all of M_n(F_q) as row tuples; q^(n^2) items checked against the cap."""
    _check_prime(q)
    total = q ** (n * n)
    if total > cap:
        raise OracleBoundError(
            f"enumerating M_{n}(F_{q}) needs {total} elements, above the cap {cap}"
        )
    for flat in product(range(q), repeat=n * n):
        yield tuple(flat[i * n : (i + 1) * n] for i in range(n))


_GL_CACHE: dict[tuple[int, int], list] = {}


def _gl_with_inverses(n: int, q: int, cap: int) -> list:
    """All of GL_n(F_q) with inverses, by rejection over M_n(F_q); cached."""
    total = q ** (n * n)
    if total > cap:
        # checked before consulting the cache so the bound is a property
        # of the inputs, not of what happened to be computed earlier
        raise OracleBoundError(
            f"enumerating M_{n}(F_{q}) needs {total} elements, above the cap {cap}"
        )
    key = (n, q)
    if key not in _GL_CACHE:
        elems = []
        for rows in iter_matrices(n, q, cap):
            if _det(rows, q) != 0:
                elems.append((rows, _inverse(rows, q)))
        if len(elems) != gl_order(n, q):
            raise OracleConsistencyError(
                f"streamed {len(elems)} invertible matrices, order formula says {gl_order(n, q)}"
            )
        _GL_CACHE[key] = elems
    return _GL_CACHE[key]


def flag_orbit_count(lam: Partition, q: int, cap: int = DEFAULT_CAP) -> int:
    """Exhaustive count of flags of shape lam in F_q^n.

    Breadth-first closure of the standard flag under generators of
    GL_n(F_q); each flag is a tuple of reduced-row-echelon bases, so
    every coset of the flag stabilizer is seen exactly once.
    """
    _check_prime(q)
    n = lam.n
    dims = []
    acc = 0
    for part in lam.parts[:-1]:
        acc += part
        dims.append(acc)
    std = tuple(_identity(n)[:m] for m in dims)
    gens = _gl_generators(n, q)
    seen = {std}
    frontier = [std]
    while frontier:
        fresh = []
        for flag in frontier:
            for g in gens:
                img = tuple(_rref(_mat_mul(sub, g, q), q) for sub in flag)
                if img not in seen:
                    seen.add(img)
                    if len(seen) > cap:
                        raise OracleBoundError(
                            f"flag orbit for {lam} over F_{q} exceeds the cap {cap}"
                        )
                    fresh.append(img)
        frontier = fresh
    return len(seen)


def parabolic_coset_report(lam: Partition, n: int, q: int, cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """(exhaustive flag-orbit count, group-order quotient) for P_lam cosets in GL_n(F_q)."""
    if lam.n != n:
        raise ValueError(f"{lam} is not a partition of n = {n}")
    _check_prime(q)
    order_g = gl_order(n, q)
    order_p = parabolic_order(lam, q)
    if order_g % order_p != 0:
        raise OracleConsistencyError(f"|GL_{n}(F_{q})| not divisible by |P_{lam}(F_{q})|")
    quotient = order_g // order_p
    if quotient > cap:
        raise OracleBoundError(
            f"coset space for {lam} over F_{q} has {quotient} elements, above the cap {cap}"
        )
    observed = flag_orbit_count(lam, q, cap)
    return observed, quotient


def count_parabolic_cosets(lam: Partition, n: int, q: int, cap: int = DEFAULT_CAP) -> int:
    """|P_lam(F_q) \\ GL_n(F_q)|, exhaustively counted and order-checked."""
    observed, quotient = parabolic_coset_report(lam, n, q, cap)
    if observed != quotient:
        raise OracleConsistencyError(
            f"flag orbit count {observed} != order quotient {quotient} for {lam}, q={q}"
        )
    return observed


# ---------------------------------------------------------------------------
# depth-one character multiplicities


def xi_multiplicity(lam: Partition, mu: Partition, n: int, q: int, cap: int = DEFAULT_CAP) -> int:
    """Multiplicity of the depth-one character of shape lam in the P_mu-coset functions.

    Counts k in GL_n(F_q) with k A_lam k^(-1) in n_mu(F_q) and divides
    by |P_mu(F_q)|; the division is exact because the condition set is
    a union of left P_mu(F_q)-cosets (P_mu normalizes n_mu).
    """
    if lam.n != n or mu.n != n:
        raise ValueError(f"{lam} and {mu} must both be partitions of n = {n}")
    _check_prime(q)
    a_rows = build_A_lambda(lam, q).rows
    shape = ParabolicShape(mu)
    outside = [(i, j) for i in range(n) for j in range(n) if not shape.in_n(i, j)]
    # column j of A_lam is either zero or a standard basis vector e_src
    col_src = [None] * n
    for i in range(n):
        for j in range(n):
            if a_rows[i][j]:
                col_src[j] = i
    hits = 0
    for k, kinv in _gl_with_inverses(n, q, cap):
        ka = tuple(
            tuple(k[i][col_src[j]] if col_src[j] is not None else 0 for j in range(n))
            for i in range(n)
        )
        conj = _mat_mul(ka, kinv, q)
        if all(conj[i][j] == 0 for i, j in outside):
            hits += 1
    order_p = parabolic_order(mu, q)
    if hits % order_p != 0:
        raise OracleConsistencyError(
            f"condition-set size {hits} not divisible by |P_{mu}(F_{q})| = {order_p}"
        )
    return hits // order_p


def multiplicity_matrix(n: int, q: int, cap: int = DEFAULT_CAP) -> dict[Partition, dict[Partition, int]]:
    """M[lam][mu] = xi_multiplicity(lam, mu), rows and columns in canonical order."""
    parts = enumerate_partitions(n)
    return {lam: {mu: xi_multiplicity(lam, mu, n, q, cap) for mu in parts} for lam in parts}


# ---------------------------------------------------------------------------
# census and sampling helpers


def nilpotent_census(n: int, q: int, cap: int = DEFAULT_CAP) -> int:
    """Number of nilpotent matrices in M_n(F_q); the closed form is q^(n^2 - n)."""
    count = 0
    for rows in iter_matrices(n, q, cap):
        if FqMatrix(q, rows).is_nilpotent():
            count += 1
    return count


def random_invertible(n: int, q: int, rng) -> FqMatrix:
    """Uniform element of GL_n(F_q) by rejection sampling."""
    _check_prime(q)
    while True:
        rows = tuple(tuple(rng.randrange(q) for _ in range(n)) for _ in range(n))
        if _det(rows, q) != 0:
            return FqMatrix(q, rows)


def random_nilpotent(n: int, q: int, rng) -> FqMatrix:
    """Random nilpotent matrix: a random strictly upper triangular one, conjugated."""
    upper = tuple(
        tuple(rng.randrange(q) if j > i else 0 for j in range(n)) for i in range(n)
    )
    g = random_invertible(n, q, rng)
    return g * FqMatrix(q, upper) * g.inverse()

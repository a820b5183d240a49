"""Lattices built from binary codes.

The embedding ``embed`` lifts F2 vectors to {0,1}-vectors in Z^n.  It is not
additive: over Z,

    bar(c + c') = bar c + bar c' - 2 * bar(c o c')

with ``o`` the coordinate-wise product.  Everything in this module is an
exact integer-lattice construction on top of that lift:

* ``construction_a``      -- bar C + 2 Z^n, equivalently {z : z mod 2 in C}
* ``construction_d``      -- scaled generator blocks 2^(a-i) bar K_i of a tower
* ``vladut_special_d``    -- the special shape (2^a bar K_0, 2^(a-1) bar c_1,
                             ..., 2 bar c_(a-1), bar K_a)
* ``simplified_d``        -- span of the embedded minimum-weight codewords
* ``construction_c_star`` -- 2^n Z^n plus nested intersections of scaled
                             Construction-A cosets; collapses to 2^(n-1) L_A
* ``d_bar_member`` / ``d_bar_is_lattice`` -- the set sum
  2^a Z^n + 2^(a-1) bar C_1 + ... + bar C_a, which is a lattice iff the
  tower is Schur-closed; membership is decided by digit peeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Sequence, Union

from .errors import (
    LengthMismatch,
    NotFullRank,
    QuotientTooLarge,
    ShapeMismatch,
    TowerViolation,
    WeightViolation,
)
from .gf2core import (
    BinaryMatrix,
    BinaryVector,
    Code,
    CodeTower,
    min_distance,
    min_weight_codewords,
    rank,
    schur_product,
)
from .zlattice import IntVec, Lattice, lattices_equal, scale

__all__ = [
    "embed",
    "embed_sum_identity_check",
    "mod2_reduction",
    "construction_a",
    "construction_a_member",
    "DTowerInput",
    "construction_d",
    "vladut_special_d",
    "simplified_d",
    "construction_c_star",
    "c_star_definitional",
    "d_bar_member",
    "d_bar_span",
    "d_bar_is_lattice",
    "DBAR_COSET_CAP",
]

DBAR_COSET_CAP = 1 << 20

C_STAR_AMBIENT_CAP = 32
C_STAR_CROSSCHECK_CAP = 8


def embed(x: Union[BinaryVector, BinaryMatrix]):
    """Entry-wise lift to Z: 0 -> 0, 1 -> 1.

    Vectors become integer tuples; matrices become lists of integer column
    tuples (the generator layout used by lattices).
    """
    if isinstance(x, BinaryVector):
        return x.coords()
    if isinstance(x, BinaryMatrix):
        return [c.coords() for c in x.columns()]
    raise TypeError(f"cannot embed {type(x).__name__}")


def embed_sum_identity_check(c: BinaryVector, cp: BinaryVector) -> bool:
    """Evaluate bar(c+c') = bar c + bar c' - 2 bar(c o c') over Z exactly."""
    if c.n != cp.n:
        raise LengthMismatch(f"{c.n} != {cp.n}")
    lhs = embed(c + cp)
    e1, e2, e3 = embed(c), embed(cp), embed(schur_product(c, cp))
    rhs = tuple(e1[t] + e2[t] - 2 * e3[t] for t in range(c.n))
    return lhs == rhs


def mod2_reduction(v: Sequence[int]) -> BinaryVector:
    """Entry-wise reduction of an integer vector to F2."""
    return BinaryVector.from_coords([e & 1 for e in v])


def _unit_columns(n: int, factor: int) -> list[IntVec]:
    return [tuple(factor if t == i else 0 for t in range(n)) for i in range(n)]


def construction_a(C: Code) -> Lattice:
    """bar C + 2 Z^n, generated by embedded generators and 2 e_i.

    Membership law (cross-checked by tests): v is a member iff its mod-2
    reduction is a codeword.
    """
    gens = [c.coords() for c in C.gen.columns()]
    gens.extend(_unit_columns(C.n, 2))
    return Lattice.from_generators(C.n, gens)


def construction_a_member(C: Code, v: Sequence[int]) -> bool:
    """The mod-2 membership law for Construction A."""
    if len(v) != C.n:
        raise LengthMismatch(f"{len(v)} != {C.n}")
    return C.contains(mod2_reduction(v))


@dataclass(frozen=True)
class DTowerInput:
    """Generator blocks K_0 .. K_a: block (K_i .. K_a) generates level C_i."""

    matrices: tuple[BinaryMatrix, ...]

    def __post_init__(self):
        if len(self.matrices) < 2:
            raise ShapeMismatch("need at least K_0 and K_1")
        n = self.matrices[0].n
        for M in self.matrices:
            if M.n != n:
                raise ShapeMismatch("generator blocks have different row counts")

    @property
    def n(self) -> int:
        return self.matrices[0].n

    @property
    def a(self) -> int:
        return len(self.matrices) - 1

    def level_code(self, i: int) -> Code:
        """C_i, the span of blocks K_i .. K_a (C_0 is the full space)."""
        stack = self.matrices[i]
        for M in self.matrices[i + 1 :]:
            stack = stack.hstack(M)
        return Code(stack)


def construction_d(inp: DTowerInput, strict: bool = True) -> Lattice:
    """Lattice generated by the scaled embedded blocks 2^(a-i) bar K_i.

    Strict mode validates the tower: the concatenated blocks must be a
    basis of F2^n, each suffix block stack must have independent columns,
    and d(C_i) >= 4^i for i >= 1.  Non-strict only checks shapes, which the
    special instances below need (they may violate the distance bounds).
    """
    n, a = inp.n, inp.a
    if strict:
        widths = [M.k for M in inp.matrices]
        if sum(widths) != n:
            raise TowerViolation(
                f"blocks supply {sum(widths)} columns for ambient dimension {n}"
            )
        full = inp.matrices[0]
        for M in inp.matrices[1:]:
            full = full.hstack(M)
        if rank(full) != n:
            raise TowerViolation("concatenated blocks do not span F2^n")
        for i in range(1, a + 1):
            Ci = inp.level_code(i)
            if Ci.dimension != sum(widths[i:]):
                raise TowerViolation(f"columns of (K_{i} .. K_{a}) are dependent")
            if Ci.dimension == 0:
                raise TowerViolation(f"level {i} is the zero code")
            if min_distance(Ci) < 4**i:
                raise TowerViolation(f"d(C_{i}) < 4^{i}")
    gens: list[IntVec] = []
    for i, M in enumerate(inp.matrices):
        f = 2 ** (a - i)
        for col in M.columns():
            gens.append(tuple(f * e for e in col.coords()))
    return Lattice.from_generators(n, gens)


def vladut_special_d(
    K0: BinaryMatrix,
    c_list: Sequence[BinaryVector],
    Ka: BinaryMatrix,
    a: int,
) -> Lattice:
    """L(2^a bar K_0, 2^(a-1) bar c_1, ..., 2 bar c_(a-1), bar K_a).

    Validates Hamming weight ||c_i|| = 4^i and that the concatenation
    (K_0 | c_1 | ... | c_(a-1) | K_a) is square and invertible over F2.
    """
    if a != len(c_list) + 1:
        raise ShapeMismatch(f"a = {a} but {len(c_list)} middle vectors given")
    n = K0.n
    if Ka.n != n or any(c.n != n for c in c_list):
        raise ShapeMismatch("blocks have different block lengths")
    for i, c in enumerate(c_list, start=1):
        if c.weight != 4**i:
            raise WeightViolation(f"||c_{i}|| = {c.weight}, need 4^{i} = {4 ** i}")
    total = K0.k + len(c_list) + Ka.k
    if total != n:
        raise NotFullRank(f"{total} columns for ambient dimension {n}")
    stack = K0
    for c in c_list:
        stack = stack.hstack(BinaryMatrix.from_columns([c]))
    stack = stack.hstack(Ka)
    if rank(stack) != n:
        raise NotFullRank("(K_0 | c_1 | ... | K_a) is singular over F2")
    gens: list[IntVec] = []
    for col in K0.columns():
        gens.append(tuple((2**a) * e for e in col.coords()))
    for i, c in enumerate(c_list, start=1):
        f = 2 ** (a - i)
        gens.append(tuple(f * e for e in c.coords()))
    for col in Ka.columns():
        gens.append(col.coords())
    return Lattice.from_generators(n, gens)


def simplified_d(C: Code) -> Lattice:
    """Lattice generated by the embedded minimum-weight codewords bar S_C."""
    S = min_weight_codewords(C)
    return Lattice.from_generators(C.n, [c.coords() for c in S])


def _l_a_scaled_by(C: Code, e: int) -> Lattice:
    """2^e * L_A(C) generated directly from scaled codeword embeddings."""
    f = 2**e
    gens = [tuple(f * x for x in c.coords()) for c in C.codewords() if not c.is_zero()]
    gens.extend(_unit_columns(C.n, 2 * f))
    return Lattice.from_generators(C.n, gens)


def c_star_definitional(C: Code) -> Lattice:
    """The intersection form evaluated symbolically (small n only).

    Term i of the definition is the coset union 2^(n-i) bar C + 2^(n-i+1) Z^n,
    which as a set equals the scaled Construction-A lattice 2^(n-i) L_A(C).
    The terms are therefore nested, so the n-fold intersection collapses to
    the first term; the nesting is verified here by explicit membership of
    every basis vector, not assumed.
    """
    n = C.n
    if n > C_STAR_CROSSCHECK_CAP:
        raise ValueError(f"definitional route capped at n = {C_STAR_CROSSCHECK_CAP}")
    terms = [_l_a_scaled_by(C, n - i) for i in range(1, n + 1)]
    for i in range(len(terms) - 1):
        for col in terms[i].basis:
            if not terms[i + 1].contains(col):
                raise ArithmeticError("term nesting violated (bug)")
    first = terms[0]
    gens = list(first.basis) + _unit_columns(n, 2**n)
    return Lattice.from_generators(n, gens)


def construction_c_star(C: Code) -> Lattice:
    """2^(n-1) * L_A(C), with the definitional route cross-checked for small n."""
    n = C.n
    if n > C_STAR_AMBIENT_CAP:
        raise ValueError(f"ambient dimension {n} > cap {C_STAR_AMBIENT_CAP}")
    collapsed = scale(construction_a(C), 2 ** (n - 1))
    if n <= C_STAR_CROSSCHECK_CAP:
        if not lattices_equal(c_star_definitional(C), collapsed):
            raise ArithmeticError("intersection form disagrees with collapse (bug)")
    return collapsed


# ---------------------------------------------------------------------------
# the code formula (set sum), which need not be a lattice
# ---------------------------------------------------------------------------

def d_bar_member(T: CodeTower, v: Sequence[int]):
    """Digit-peeling membership in 2^a Z^n + sum_i 2^(a-i) bar C_i.

    Each level's residue mod 2 is forced, so the greedy decomposition is
    the only candidate: c_a must equal v mod 2 and must lie in C_a, then
    recurse on (v - bar c_a) / 2 against C_(a-1), and so on.  Returns the
    decomposition ``(c_a, ..., c_1, tail)`` with tail in Z^n, or False.
    """
    n = T.n
    if len(v) != n:
        raise LengthMismatch(f"{len(v)} != {n}")
    cur = [int(e) for e in v]
    peeled: list[BinaryVector] = []
    for idx in range(T.a - 1, -1, -1):  # levels C_a down to C_1
        c = mod2_reduction(cur)
        if not T.levels[idx].contains(c):
            return False
        coords = c.coords()
        cur = [(cur[t] - coords[t]) // 2 for t in range(n)]
        peeled.append(c)
    return tuple(peeled) + (tuple(cur),)


def d_bar_span(T: CodeTower) -> Lattice:
    """The lattice generated by the set sum (its Z-span L').

    The embedding is not additive, so the span needs every embedded
    codeword of every level, not just embedded generators; 2^a Z^n absorbs
    the correction terms only one scaling step at a time.
    """
    n, a = T.n, T.a
    gens: list[IntVec] = _unit_columns(n, 2**a)
    for idx, level in enumerate(T.levels):
        f = 2 ** (a - (idx + 1))
        for c in level.codewords():
            if not c.is_zero():
                gens.append(tuple(f * e for e in c.coords()))
    return Lattice.from_generators(n, gens)


def d_bar_is_lattice(T: CodeTower, cap: int = DBAR_COSET_CAP):
    """Decide whether the set sum equals its own Z-span.

    The span L' contains 2^a Z^n, membership in the set is invariant under
    2^a Z^n shifts, and the HNF digit expansion walks each coset of
    L' / 2^a Z^n exactly once.  Returns ``(True, None)`` or
    ``(False, witness)`` with a span vector outside the set.
    """
    n, a = T.n, T.a
    L = d_bar_span(T)
    mod = 2**a
    radii = []
    for j in range(n):
        p = L.basis[j][j]
        if mod % p:
            raise ArithmeticError("pivot does not divide 2^a (bug)")
        radii.append(mod // p)
    count = 1
    for r in radii:
        count *= r
        if count > cap:
            raise QuotientTooLarge(f"quotient exceeds {cap} cosets")
    for digits in iter_product(*[range(r) for r in radii]):
        rep = [0] * n
        for j, x in enumerate(digits):
            if x:
                col = L.basis[j]
                for t in range(j, n):
                    rep[t] += x * col[t]
        rep = [e % mod for e in rep]
        if d_bar_member(T, rep) is False:
            return False, tuple(rep)
    return True, None

"""End-to-end construction of a nontrivial normal subgroup ``N`` missing ``H``.

Chain: core of ``H`` -> Hall completion ``K = H * Q`` -> normal core ``I``
of ``K`` with coset representatives ``b_1..b_m`` -> split
``I = (I ∩ H) * J`` -> ``L`` = normal closure of ``J`` in ``I`` ->
``N = ⋂ b_i^-1 L b_i``. ``N`` is never materialized; it is represented by
the :func:`in_n` oracle and one explicit witness element.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .errors import VerificationFailed, WitnessSearchExhausted, WitnessTooLong
from .factorization import FreeFactorization, factorize, preimage_mark
from .hall import HallResult, complete
from .normal_core import (
    DEFAULT_CAP,
    GroupClosure,
    PermRep,
    cayley_cover,
    core_closure,
    coset_reps,
    perm_rep,
)
from .stallings import (
    INFINITE,
    CoreGraph,
    basis_from_tree,
    build_core,
    canonical_form,
    index_or_infinite,
    membership,
    pullback,
)
from .words import Word, commutator, conjugate, invert, multiply, product_of, reduced_words


DEFAULT_MAX_WITNESS_LENGTH = 1_000_000


class Status(str, enum.Enum):
    WITNESS = "witness"
    FINITE_INDEX = "no_witness_finite_index"
    TRIVIAL = "trivial_subgroup"


@dataclass(frozen=True)
class PipelineConfig:
    max_cosets: int = DEFAULT_CAP
    verify_depth_disjoint: int = 6
    verify_depth_normal: int = 4
    witness_budget: int = 64
    max_witness_length: int = DEFAULT_MAX_WITNESS_LENGTH
    verify: bool = True

    def __post_init__(self):
        if self.max_cosets < 1:
            raise ValueError("max_cosets must be >= 1")
        if self.verify_depth_disjoint < 0 or self.verify_depth_normal < 0:
            raise ValueError("verification depths must be >= 0")
        if self.witness_budget < 1:
            raise ValueError("witness_budget must be >= 1")
        if self.max_witness_length < 1:
            raise ValueError("max_witness_length must be >= 1")


@dataclass
class Context:
    """Every intermediate object of one pipeline run."""

    rank: int
    generators: tuple
    core_h: CoreGraph
    hall: HallResult
    rep: PermRep
    closure: GroupClosure
    cover_i: CoreGraph
    reps: tuple
    fac: FreeFactorization

    def in_h(self, w):
        return membership(self.core_h, w)

    def in_k(self, w):
        return membership(self.hall.cover, w)

    def in_i(self, w):
        return membership(self.cover_i, w)

    def in_l(self, w):
        return self.fac.in_l(w)

    def in_n(self, w):
        return in_n(w, self)


def in_n(w: Word, ctx: Context) -> bool:
    """``w ∈ b_i^-1 L b_i`` for every coset rep, i.e. ``b_i w b_i^-1 ∈ L``."""
    if not ctx.in_i(w):
        return False
    letters = w.letters
    for b in ctx.reps:
        # path of b w b^-1, read without reducing
        if not ctx.fac.in_l_letters(b.letters + letters + invert(b).letters):
            return False
    return True


def _candidates(basis_j, basis_i=()):
    yield from basis_j
    for u, v in product(basis_j, repeat=2):
        yield multiply(u, v)
    # A single basisJ word can commute with all of its rep-conjugates (e.g. a
    # power of a generator fixed by every rep). L is normal in I, so j times a
    # conjugate of j by an element of I is again in L.
    for j in basis_j:
        for g in basis_i:
            for h in (g, invert(g)):
                yield multiply(j, conjugate(j, h))


def _bounded_commutator(args, limit):
    c = args[0]
    for step, x in enumerate(args[1:], start=2):
        c = commutator(c, x)
        if len(c) > limit:
            raise WitnessTooLong(limit, len(c), step)
    return c


@dataclass(frozen=True)
class WitnessChoice:
    witness: Word
    seed: Word  # the element of L that was conjugated
    arguments: tuple  # b_i^-1 seed b_i, in coset-rep order
    attempts: int


def construct_witness(
    ctx: Context, budget: int = 64, max_length: int = DEFAULT_MAX_WITNESS_LENGTH
) -> WitnessChoice:
    """Left-normed commutator of the conjugates of one element of ``L``.

    The commutator roughly doubles in length with every argument, so large
    normal cores give astronomically long witnesses; ``max_length`` turns that
    into a ``WitnessTooLong`` error instead of exhausting memory.
    """
    attempts = 0
    for seed in _candidates(ctx.fac.basis_j, ctx.fac.basis):
        if attempts >= budget:
            break
        attempts += 1
        if seed.is_identity():
            continue
        args = tuple(conjugate(seed, b) for b in ctx.reps)
        c = _bounded_commutator(args, max_length)
        if not c.is_identity() and in_n(c, ctx) and not ctx.in_h(c):
            return WitnessChoice(c, seed, args, attempts)
    raise WitnessSearchExhausted(f"no nontrivial witness after {attempts} candidates")


def build_context(core_h, generators, rank, max_cosets=DEFAULT_CAP) -> Context:
    hall = complete(core_h)
    rep = perm_rep(hall.cover)
    closure = core_closure(rep, max_cosets)
    cover_i = cayley_cover(closure, rank)
    reps = coset_reps(cover_i)
    delta = preimage_mark(cover_i, closure.covering_map, hall.h_edges, hall.cover)
    fac = factorize(cover_i, delta)
    return Context(rank, tuple(generators), core_h, hall, rep, closure, cover_i, reps, fac)


@dataclass
class VerificationSummary:
    depths: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    passed: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.passed.values())

    def to_dict(self):
        return {"depths": dict(self.depths), "counts": dict(self.counts), "passed": dict(self.passed)}


@dataclass
class WitnessReport:
    status: Status
    rank: int
    generators: tuple
    h_rank: int
    h_index: object  # int or INFINITE
    k_index: Optional[int] = None
    basis_q: tuple = ()
    i_index: Optional[int] = None
    coset_reps: tuple = ()
    basis_ih: tuple = ()
    basis_j: tuple = ()
    witness: Optional[Word] = None
    choice: Optional[WitnessChoice] = None
    verification: Optional[VerificationSummary] = None
    config: PipelineConfig = field(default_factory=PipelineConfig)
    context: Optional[Context] = field(default=None, repr=False)

    def to_json_dict(self):
        def ws(words):
            return [str(w) for w in words]

        finite = self.status is Status.FINITE_INDEX
        return {
            "status": self.status.value,
            "rank": self.rank,
            "hGenerators": ws(self.generators),
            "hRank": self.h_rank,
            "hIndex": "infinite" if self.h_index == INFINITE else self.h_index,
            "kIndex": self.k_index,
            "qBasis": ws(self.basis_q),
            "iIndex": None if finite else self.i_index,
            "cosetReps": None if finite else ws(self.coset_reps),
            "basisIH": None if finite else ws(self.basis_ih),
            "basisJ": None if finite else ws(self.basis_j),
            "witness": None if self.witness is None else str(self.witness),
            "verification": None if self.verification is None else self.verification.to_dict(),
            "config": {
                "maxCosets": self.config.max_cosets,
                "verifyDepthDisjoint": self.config.verify_depth_disjoint,
                "verifyDepthNormal": self.config.verify_depth_normal,
                "witnessBudget": self.config.witness_budget,
                "maxWitnessLength": self.config.max_witness_length,
            },
        }


def check_rank_formulas(ctx: Context):
    r = ctx.rank
    k = ctx.hall.k_index
    m = ctx.closure.m
    if k != ctx.core_h.n:
        raise VerificationFailed("rankFormula", f"[F:K]={k}", f"core of H has {ctx.core_h.n} vertices")
    if ctx.hall.k_rank != 1 + k * (r - 1):
        raise VerificationFailed("rankFormula", f"rank(K)={ctx.hall.k_rank}", f"expected {1 + k * (r - 1)}")
    if ctx.fac.rank_i != 1 + m * (r - 1) or ctx.cover_i.subgroup_rank != ctx.fac.rank_i:
        raise VerificationFailed("rankFormula", f"rank(I)={ctx.fac.rank_i}", f"expected {1 + m * (r - 1)}")


def run_pipeline(generators, rank, config: PipelineConfig = None) -> WitnessReport:
    config = config or PipelineConfig()
    generators = tuple(generators)
    core_h = build_core(generators, rank)
    h_index = index_or_infinite(core_h)
    trivial = core_h.edge_count == 0
    if not trivial and h_index != INFINITE:
        # the hypothesis fails; no search is attempted
        return WitnessReport(
            status=Status.FINITE_INDEX,
            rank=rank,
            generators=generators,
            h_rank=core_h.subgroup_rank,
            h_index=h_index,
            k_index=core_h.n,
            config=config,
        )

    ctx = build_context(core_h, generators, rank, config.max_cosets)
    check_rank_formulas(ctx)
    choice = construct_witness(ctx, config.witness_budget, config.max_witness_length)
    witness = choice.witness
    if trivial:
        # N = F; the first free generator is the canonical witness
        witness = Word.generator(rank, 0)
    report = WitnessReport(
        status=Status.TRIVIAL if trivial else Status.WITNESS,
        rank=rank,
        generators=generators,
        h_rank=core_h.subgroup_rank,
        h_index=h_index,
        k_index=ctx.hall.k_index,
        basis_q=ctx.hall.basis_q,
        i_index=ctx.closure.m,
        coset_reps=ctx.reps,
        basis_ih=ctx.fac.basis_ih,
        basis_j=ctx.fac.basis_j,
        witness=witness,
        choice=choice,
        config=config,
        context=ctx,
    )
    if witness.is_identity() or not in_n(witness, ctx) or ctx.in_h(witness):
        raise VerificationFailed("witness", str(witness), "certificate check failed")
    if config.verify:
        report.verification = verify_report(
            report, config.verify_depth_disjoint, config.verify_depth_normal
        )
    return report


# verification ----------------------------------------------------------------


def known_members(report: WitnessReport):
    """Elements of N the pipeline can name: witness, its conjugates by the
    coset reps, the commutator arguments that lie in N, pairwise products."""
    ctx = report.context
    c = report.witness
    conjugates = list(dict.fromkeys([c] + [conjugate(c, b) for b in ctx.reps[1:]]))
    members = dict.fromkeys(conjugates)
    if report.choice is not None:
        members.update(dict.fromkeys(x for x in report.choice.arguments if in_n(x, ctx)))
    for u, v in product(conjugates, repeat=2):
        w = multiply(u, v)
        if not w.is_identity():
            members.setdefault(w, None)
    return list(members)


def _retract_check(w, ctx):
    """Slow path for ``b w b^-1 ∈ L``: express in the basis, then retract."""
    fac = ctx.fac
    for b in ctx.reps:
        seq = fac.express(b.letters + w.letters + invert(b).letters)
        if fac.retract(seq):
            return False
    return True


def verify_disjointness(ctx: Context, depth: int) -> int:
    """Every nonempty word of length <= depth in a basis of H falls outside N."""
    rank = ctx.rank
    h_basis = basis_from_tree(ctx.core_h).words
    count = 0
    for seq in reduced_words(len(h_basis), depth, min_len=1):
        w = product_of([h_basis[x - 1] if x > 0 else invert(h_basis[-x - 1]) for x in seq], rank)
        count += 1
        if in_n(w, ctx):
            raise VerificationFailed("disjointness", str(w), f"basis word {seq} lies in N")
    return count


def verify_normality(ctx: Context, members, depth: int):
    """``f^-1 w f`` stays in N for every ``|f| <= depth`` and named member ``w``.

    Returns ``(count, conjugates checked)``.
    """
    rank = ctx.rank
    for w in members:
        if not in_n(w, ctx):
            raise VerificationFailed("normality", str(w), "named member is not in N")
    found = []
    for f in reduced_words(rank, depth):
        fw = Word(rank, f)
        for w in members:
            cw = conjugate(w, fw)
            if not in_n(cw, ctx):
                raise VerificationFailed("normality", str(cw), f"conjugate of {w} by {fw}")
            found.append(cw)
    return len(found), found


def verify_free_factor(ctx: Context) -> int:
    lhs = canonical_form(build_core(ctx.fac.basis_ih, ctx.rank))
    rhs = canonical_form(pullback(ctx.cover_i, ctx.core_h))
    if lhs != rhs:
        raise VerificationFailed("freeFactor", "", f"{lhs!r} != {rhs!r}")
    return 1


def verify_lemma_intersection(ctx: Context, elements) -> int:
    """Members of N lie in L and in every ``b_i^-1 L b_i``, via the basis route."""
    count = 0
    for w in elements:
        count += 1
        if not _retract_check(w, ctx) or not ctx.in_l(w):
            raise VerificationFailed("lemmaIntersection", str(w), "missing from some conjugate of L")
    return count


def verify_report(report: WitnessReport, depth_disjoint: int, depth_normal: Optional[int] = None):
    """Run all four suites; raises :class:`VerificationFailed` on the first failure."""
    if report.status is Status.FINITE_INDEX:
        raise ValueError("finite-index reports carry nothing to verify")
    if depth_normal is None:
        depth_normal = min(depth_disjoint, 4)
    ctx = report.context
    summary = VerificationSummary()
    summary.depths = {"disjointness": depth_disjoint, "normality": depth_normal}
    summary.counts["disjointness"] = verify_disjointness(ctx, depth_disjoint)
    summary.passed["disjointness"] = True
    count, found = verify_normality(ctx, known_members(report), depth_normal)
    summary.counts["normality"] = count
    summary.passed["normality"] = True
    summary.counts["freeFactor"] = verify_free_factor(ctx)
    summary.passed["freeFactor"] = True
    summary.counts["lemmaIntersection"] = verify_lemma_intersection(ctx, found)
    summary.passed["lemmaIntersection"] = True
    return summary

"""The trace criterion for inverse stability of g = X^p - X + xi.

Write alpha_n for a root of the denominator D_n of the n-th iterate of 1/g.
Each alpha_n is a Moebius transform (a_n alpha + b_n)/(c_n alpha + d_n) of a
root alpha of g itself, and the coefficient triples obey the recurrence

    a_1, c_1, d_1 = xi, 1, 0        a_2, c_2, d_2 = -1, xi, -1
    a_{n+1} = -a_n d_n
    c_{n+1} = c_n^2 (xi - t^p + t)      with t = d_n / c_n
    d_{n+1} = -c_n^2

(b_n is determined and never needed).  The decisive quantity is the trace of
a_n / c_n down to the prime field: D_n is irreducible over F_q exactly when
that trace is nonzero for all m <= n, and g is inversely stable (every D_n
irreducible) exactly when it is nonzero for every n.

The state space (a, c, d) is finite, of size at most q^3, so the sequence of
states from n = 2 on is eventually periodic and the criterion terminates:
:func:`decide_inverse_stability` walks the states with Brent's cycle
detection, watching for a zero trace on the way.  Once the cycle closes with
no zero trace, none can ever appear and g is stable.

The module also carries the closed-form trace of a general Moebius transform
of a root of g (:func:`mobius_trace_formula`) and two classical
irreducibility predicates for sparse polynomials (:func:`wan_irreducible_p`
for X^p + aX + b, :func:`agou_quartic_irreducible` for X^4 + aX + b in
characteristic two), which serve as independent cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import (
    AZero,
    BothZero,
    CtxMismatch,
    CZero,
    IrreducibilityHypothesisViolated,
    NotCharTwo,
)
from .fields import (
    FieldCtx,
    FieldElement,
    abs_trace,
    element_from_text,
    element_to_text,
    finite_field,
)
from .polys import Poly

STABLE = 'stable'
UNSTABLE = 'unstable'
#: reserved outcome value; decide_inverse_stability never produces it, since
#: Tr(xi) = 0 is a genuine instability (D_1 = g is reducible), not a gap
INAPPLICABLE = 'inapplicable'


@dataclass(frozen=True)
class CriterionState:
    """The Moebius coefficient triple (a_n, c_n, d_n) at index n."""

    n: int
    a: FieldElement
    c: FieldElement
    d: FieldElement

    def key(self):
        """Hashable identity of the triple, ignoring the index."""
        return (self.a.val, self.c.val, self.d.val)


class TraceRow(NamedTuple):
    """One row of the criterion table: the state plus a_n/c_n and its trace."""

    n: int
    a: FieldElement
    c: FieldElement
    d: FieldElement
    ratio: FieldElement
    trace: FieldElement


def init_states(xi: FieldElement):
    """The two seed states (n = 1 and n = 2) for the given xi."""
    ctx = xi.ctx
    one = ctx.one
    s1 = CriterionState(1, xi, one, ctx.zero)
    s2 = CriterionState(2, -one, xi, -one)
    return s1, s2


def step_state(state: CriterionState, xi: FieldElement) -> CriterionState:
    """Advance the recurrence one index; defined for n >= 2 with c != 0."""
    if state.n < 2:
        raise ValueError("the recurrence starts at n = 2; use init_states")
    c = state.c
    if c.val == 0:
        raise CZero(f"c_{state.n} = 0, cannot advance")
    if xi.ctx is not c.ctx:
        raise CtxMismatch("xi from a different field")
    t = state.d / c
    c_sq = c * c
    new_a = -(state.a * state.d)
    new_c = c_sq * (xi - t ** xi.ctx.p + t)
    new_d = -c_sq
    return CriterionState(state.n + 1, new_a, new_c, new_d)


def trace_indicator(state: CriterionState) -> FieldElement:
    """Trace of a_n / c_n down to the prime field."""
    if state.c.val == 0:
        raise CZero(f"c_{state.n} = 0, indicator undefined")
    return abs_trace(state.a / state.c)


def _row(state: CriterionState) -> TraceRow:
    if state.c.val == 0:
        raise CZero(f"c_{state.n} = 0, indicator undefined")
    ratio = state.a / state.c
    return TraceRow(state.n, state.a, state.c, state.d, ratio,
                    abs_trace(ratio))


def trace_rows(xi: FieldElement, n_max: int) -> list:
    """Rows of the criterion table for n = 1 .. n_max (plain walk)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    s1, s2 = init_states(xi)
    rows = [_row(s1)]
    state = s2
    for _ in range(1, n_max):
        rows.append(_row(state))
        if state.n == n_max:
            break
        state = step_state(state, xi)
    return rows


def detect_cycle(xi: FieldElement):
    """Pre-period and period of the state sequence s_2, s_3, ... (Brent).

    Returns (mu, lam): s_{2 + mu} is the first state on the cycle and lam is
    the cycle length, so s_{n + lam} = s_n for all n >= 2 + mu.  Assumes
    Tr(xi) != 0, which keeps every c_n nonzero; otherwise CZero may
    propagate from the walk.
    """
    _, s2 = init_states(xi)
    power = lam = 1
    tortoise = s2
    hare = step_state(s2, xi)
    while tortoise.key() != hare.key():
        if power == lam:
            tortoise = hare
            power <<= 1
            lam = 0
        hare = step_state(hare, xi)
        lam += 1
    slow = fast = s2
    for _ in range(lam):
        fast = step_state(fast, xi)
    mu = 0
    while slow.key() != fast.key():
        slow = step_state(slow, xi)
        fast = step_state(fast, xi)
        mu += 1
    return mu, lam


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of the stability decision for one xi.

    ``outcome`` is 'stable' or 'unstable'.  For an unstable xi, ``witness_n``
    is the least n with trace zero (so D_witness_n is the first reducible
    denominator) and the cycle data is None, since the walk stops at the
    witness.  For a stable xi, ``preperiod``/``period`` describe the state
    cycle starting from n = 2 and the trace table covers exactly
    n = 1 .. preperiod + period + 1.  ``state_steps`` counts evaluations of
    the recurrence map.
    """

    outcome: str
    witness_n: Optional[int]
    preperiod: Optional[int]
    period: Optional[int]
    trace_table: tuple
    xi: FieldElement
    ctx: FieldCtx
    state_steps: int

    def to_dict(self) -> dict:
        """Plain-data form, round-tripped by :meth:`from_dict`."""
        return {
            'outcome': self.outcome,
            'witness_n': self.witness_n,
            'preperiod': self.preperiod,
            'period': self.period,
            'state_steps': self.state_steps,
            'field': self.ctx.describe(),
            'xi': element_to_text(self.xi),
            'trace_table': [
                {
                    'n': r.n,
                    'a': element_to_text(r.a),
                    'c': element_to_text(r.c),
                    'd': element_to_text(r.d),
                    'ratio': element_to_text(r.ratio),
                    'trace': element_to_text(r.trace),
                }
                for r in self.trace_table
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "StabilityVerdict":
        field = data['field']
        modulus = field.get('modulus')
        if modulus is not None:
            modulus = [int(s) for s in modulus.split(',')]
        ctx = finite_field(field['p'], field['e'], modulus)
        prime = ctx.prime_ctx
        rows = tuple(
            TraceRow(
                r['n'],
                element_from_text(ctx, r['a']),
                element_from_text(ctx, r['c']),
                element_from_text(ctx, r['d']),
                element_from_text(ctx, r['ratio']),
                element_from_text(prime, r['trace']),
            )
            for r in data['trace_table']
        )
        return cls(
            outcome=data['outcome'],
            witness_n=data['witness_n'],
            preperiod=data['preperiod'],
            period=data['period'],
            trace_table=rows,
            xi=element_from_text(ctx, data['xi']),
            ctx=ctx,
            state_steps=data['state_steps'],
        )


def decide_inverse_stability(xi: FieldElement) -> StabilityVerdict:
    """Decide whether X^p - X + xi is inversely stable over xi's field.

    Terminates on every input: either some trace vanishes at a finite index
    (unstable, witness recorded), or the state cycle closes with every trace
    on it nonzero (stable).  The trace at each index is checked before the
    state is ever advanced past it, so the reported witness is minimal and
    no state with c = 0 is stepped.
    """
    ctx = xi.ctx
    s1, s2 = init_states(xi)
    rows = [_row(s1)]
    if rows[0].trace.val == 0:
        # Tr(xi) = 0: D_1 = g is already reducible
        return StabilityVerdict(UNSTABLE, 1, None, None, tuple(rows),
                                xi, ctx, 0)
    rows.append(_row(s2))
    if rows[1].trace.val == 0:
        return StabilityVerdict(UNSTABLE, 2, None, None, tuple(rows),
                                xi, ctx, 0)

    # Brent's cycle search over s_2, s_3, ..., checking each new trace
    steps = 0
    power = lam = 1
    tortoise = s2
    hare = step_state(s2, xi)
    steps += 1
    row = _row(hare)
    rows.append(row)
    if row.trace.val == 0:
        return StabilityVerdict(UNSTABLE, hare.n, None, None, tuple(rows),
                                xi, ctx, steps)
    while tortoise.key() != hare.key():
        if power == lam:
            tortoise = hare
            power <<= 1
            lam = 0
        hare = step_state(hare, xi)
        steps += 1
        row = _row(hare)
        rows.append(row)
        if row.trace.val == 0:
            return StabilityVerdict(UNSTABLE, hare.n, None, None,
                                    tuple(rows), xi, ctx, steps)
        lam += 1

    # cycle closed with no zero trace anywhere on it: stable
    slow = fast = s2
    for _ in range(lam):
        fast = step_state(fast, xi)
        steps += 1
    mu = 0
    while slow.key() != fast.key():
        slow = step_state(slow, xi)
        fast = step_state(fast, xi)
        steps += 2
        mu += 1
    keep = mu + lam + 1
    return StabilityVerdict(STABLE, None, mu, lam, tuple(rows[:keep]),
                            xi, ctx, steps)


# ---------------------------------------------------------------------------
# closed-form Moebius trace and classical sparse-polynomial predicates

def mobius_trace_formula(a: FieldElement, b: FieldElement, c: FieldElement,
                         d: FieldElement, xi: FieldElement) -> FieldElement:
    """Tr_{K(gamma)/K} of (a*gamma + b)/(c*gamma + d), in closed form.

    gamma is a root of the irreducible X^p - X + xi over K = xi's field
    (irreducible requires Tr(xi) != 0; violations raise).  The pair (c, d)
    must not be (0, 0).

    For c = 0 the transform is affine in gamma, whose trace vanishes for
    p >= 3 and equals a/d for p = 2.  Otherwise the trace is

        (b c - a d) / (c^2 (xi - t^p + t))     with t = d / c,

    and the denominator is nonzero because xi - t^p + t = 0 would force
    Tr(xi) = 0.
    """
    ctx = xi.ctx
    for name, z in (('a', a), ('b', b), ('c', c), ('d', d)):
        if z.ctx is not ctx:
            raise CtxMismatch(f"{name} from a different field")
    if c.val == 0 and d.val == 0:
        raise BothZero("(c, d) = (0, 0) does not define a transform")
    if abs_trace(xi).val == 0:
        raise IrreducibilityHypothesisViolated(
            "Tr(xi) = 0, so X^p - X + xi is reducible")
    if c.val == 0:
        if ctx.p == 2:
            return a / d
        return ctx.zero
    t = d / c
    denom = c * c * (xi - t ** ctx.p + t)
    return (b * c - a * d) / denom


class WanResult(NamedTuple):
    """Outcome of :func:`wan_irreducible_p` with the certifying element."""

    irreducible: bool
    witness: Optional[FieldElement]


def wan_irreducible_p(a: FieldElement, b: FieldElement) -> WanResult:
    """Irreducibility of X^p + aX + b over F_q (p the characteristic).

    The polynomial is irreducible iff some a_0 in F_q^* satisfies
    a = -a_0^(p-1) and Tr(b / a_0^p) != 0; the first such a_0 in packed
    order is returned as the witness.  ``a`` must be nonzero.
    """
    if a.ctx is not b.ctx:
        raise CtxMismatch("a and b from different fields")
    ctx = a.ctx
    if a.val == 0:
        raise AZero("the coefficient a must be nonzero")
    p = ctx.p
    for v in range(1, ctx.order):
        a0 = FieldElement(ctx, v)
        if (-(a0 ** (p - 1))).val != a.val:
            continue
        if abs_trace(b / a0 ** p).val != 0:
            return WanResult(True, a0)
    return WanResult(False, None)


def agou_quartic_irreducible(a: FieldElement, b: FieldElement) -> bool:
    """Irreducibility of X^4 + aX + b over F_{2^e}.

    Irreducible iff e is odd and some a_0 in F_q^* has a = a_0^3 and
    Tr(b / a_0^4) != 0.  (For odd e cubing is a bijection on F_q^*, so a_0
    is unique; substituting X = a_0 Y reduces the polynomial to
    Y^4 + Y + b / a_0^4, which splits as (Y^2 + Y + r)(Y^2 + Y + r + 1)
    exactly when the trace vanishes and is irreducible otherwise.)
    Raises NotCharTwo away from characteristic two and AZero for a = 0.
    """
    if a.ctx is not b.ctx:
        raise CtxMismatch("a and b from different fields")
    ctx = a.ctx
    if ctx.p != 2:
        raise NotCharTwo("the quartic predicate needs characteristic 2")
    if a.val == 0:
        raise AZero("the coefficient a must be nonzero")
    if ctx.total_degree % 2 == 0:
        return False
    for v in range(1, ctx.order):
        a0 = FieldElement(ctx, v)
        if (a0 ** 3).val == a.val and abs_trace(b / a0 ** 4).val != 0:
            return True
    return False


@dataclass(frozen=True)
class GeneralASParams:
    """Parameters (t, a, b) of the family X^(p^t) + aX + b with a != 0."""

    t: int
    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be >= 1")
        if self.a.ctx is not self.b.ctx:
            raise CtxMismatch("a and b from different fields")
        if self.a.val == 0:
            raise AZero("the coefficient a must be nonzero")

    def polynomial(self) -> Poly:
        """The polynomial X^(p^t) + aX + b over the coefficient field."""
        ctx = self.a.ctx
        deg = ctx.p ** self.t
        vals = [0] * (deg + 1)
        vals[0] = self.b.val
        vals[1] = self.a.val
        vals[deg] = 1
        return Poly._make(ctx, tuple(vals))

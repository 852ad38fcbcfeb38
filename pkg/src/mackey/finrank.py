"""Finite-rank gl(n) dimension formulas used as independent numeric
cross-checks of the tableau combinatorics.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, dim_schur
from .symfunc import coproduct


@dataclass(frozen=True)
class MixedWeight:
    """Label (beta, gamma) of a traceless mixed-tensor simple of gl(n),
    realized by the highest weight (beta_1..beta_s, 0..0, -gamma_t..-gamma_1).
    """

    beta: Partition
    gamma: Partition
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be positive")
        if len(self.beta) + len(self.gamma) > self.n:
            # not a vanishing Schur functor: the simple does not exist at
            # this rank, and a silent 0 would corrupt dimension sums
            raise ValueError(
                f"rank {self.n} too small for bipartition with "
                f"{len(self.beta)}+{len(self.gamma)} rows")

    def highest_weight(self) -> tuple[int, ...]:
        pad = self.n - len(self.beta) - len(self.gamma)
        return self.beta.parts + (0,) * pad + tuple(-g for g in reversed(self.gamma.parts))


def dim_mixed(w: MixedWeight) -> int:
    """Weyl dimension formula for the traceless mixed tensor module.

    Exact integer arithmetic over the positive roots of gl(n); the final
    division is asserted exact, which catches weight-construction mistakes
    immediately. Symmetric under swapping beta and gamma (the dual module).
    """
    hw = w.highest_weight()
    num = 1
    den = 1
    for i in range(w.n):
        for j in range(i + 1, w.n):
            num *= hw[i] - hw[j] + j - i
            den *= j - i
    assert num % den == 0, "Weyl dimension formula produced a non-integer"
    return num // den


def branching_identity_check(lam: Partition, a: int, b: int) -> bool:
    """Finite-rank shadow of the coproduct identity: the dimension of
    S_lam(C^(a+b)) must match the coproduct expansion paired with dimensions
    over C^a and C^b.
    """
    if a < 1 or b < 1:
        raise ValueError("alphabet sizes must be positive")
    lhs = dim_schur(lam, a + b)
    rhs = sum(c * dim_schur(mu, a) * dim_schur(nu, b)
              for (mu, nu), c in coproduct(lam))
    return lhs == rhs

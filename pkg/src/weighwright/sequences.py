"""Counting sequences and solvability bounds.

Every sequence is available through its defining first-order recurrence and
through an independent route (closed form or higher-order recurrence) so the
two can be cross-checked.  All arithmetic uses Python integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .core import CoinKind, CoinState, check_state, parse_kind
from .errors import UnsupportedBound

DOMINANT_ROOT = 2.3146  # real root of x^3 = 2x^2 - x + 4, growth rate of L_n, H_n, R_n


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"sequence index must be non-negative, got {n}")


def jacobsthal(n: int) -> int:
    """J_n from J_{n+1} = J_n + 2 J_{n-1}, J_0 = 0, J_1 = 1."""
    _check_index(n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, b + 2 * a
    return a


def jacobsthal_closed(n: int) -> int:
    _check_index(n)
    return (2**n - (-1) ** n) // 3


def lhr_counts(n: int) -> tuple[int, int, int]:
    """(L_n, H_n, R_n): outcomes of length n available to an LHR coin starting light/heavy/real."""
    _check_index(n)
    L = H = R = 1
    for _ in range(n):
        L, H, R = L + 2 * H, H + 2 * R, L
    return L, H, R


def hr_lhr_counts(n: int) -> tuple[int, int]:
    """(HR_n, LHR_n): outcomes available to a coin starting heavy-or-real / in any state."""
    _check_index(n)
    hr = lhr = 1
    for k in range(1, n + 1):
        _, _, r_prev = lhr_counts(k - 1)
        hr, lhr = lhr + 2 * r_prev, lhr + 2 * hr
    return hr, lhr


def hr_lhr_closed(n: int) -> tuple[int, int]:
    """HR_n = H_n + L_{n-1} - J_{n+1} and LHR_n = L_n + H_n - J_{n+2} (n >= 1)."""
    if n < 1:
        raise ValueError("closed forms hold for n >= 1")
    L, H, _ = lhr_counts(n)
    L_prev, _, _ = lhr_counts(n - 1)
    return H + L_prev - jacobsthal(n + 1), L + H - jacobsthal(n + 2)


def linear_recurrence(coefficients: list[int], seeds: list[int], n: int) -> int:
    """s_k = sum(c_i * s_{k-1-i}) for k >= len(seeds)."""
    _check_index(n)
    values = list(seeds)
    while len(values) <= n:
        values.append(sum(c * values[-1 - i] for i, c in enumerate(coefficients)))
    return values[n]


def tribonacci_2_m1_4(seeds: list[int], n: int) -> int:
    """Third-order recurrence s_{n+1} = 2 s_n - s_{n-1} + 4 s_{n-2} shared by L, H and R."""
    return linear_recurrence([2, -1, 4], seeds, n)


def fifth_order(seeds: list[int], n: int) -> int:
    """s_n = 3 s_{n-1} - s_{n-2} + s_{n-3} - 2 s_{n-4} - 8 s_{n-5}."""
    return linear_recurrence([3, -1, 1, -2, -8], seeds, n)


def a102001(n: int) -> int:
    """Weighted Tribonacci with weights (1, 2, 4); agrees with LHR_n only for n < 7."""
    return linear_recurrence([1, 2, 4], [1, 3, 9], n)


def xgroup_counts(n: int) -> tuple[int, int, int, int, int]:
    """(LX_n, HX_n, LRX_n, LHX_n, LHRX_n): sizes of the exclusive outcome groups."""
    if n < 1:
        raise ValueError("X-group counts are defined for n >= 1")
    L, H, _ = lhr_counts(n)
    L_prev, _, _ = lhr_counts(n - 1)
    J = jacobsthal
    return (
        L - L_prev - 2 * J(n),
        H - J(n + 2),
        L_prev - J(n + 1),
        2 * J(n),
        J(n + 1),
    )


def k_sequence(w: int) -> int:
    """Largest k for which the 0:k:k mixed state is solvable in w weighings."""
    _check_index(w)
    hr, _ = hr_lhr_counts(w)
    _, _, R = lhr_counts(w)
    return min((hr - 1) // 2, R)


def lr_unknown_oblivious(w: int) -> int:
    """Oblivious cap for an LR coin in an unknown state: 1, 1, 3, 5, 11, 20, 41, 82, 163, ..."""
    _check_index(w)
    if w < 4:
        return jacobsthal(w + 1)
    k, odd = divmod(w, 2)
    if odd:
        return (jacobsthal(2 * k + 3) - 2**k + 1) // 2
    return (jacobsthal(2 * k + 2) - (k - 2) * 2 ** (k - 1) + 1) // 2


_LHR_UNKNOWN_ADAPTIVE_SMALL = (1, 1, 3, 6, 16)
_LHR_UNKNOWN_OBLIVIOUS = (1, 1, 3, 6, 14)


def lhr_unknown_adaptive(w: int) -> int:
    """1, 1, 3, 6, 16, 39, 91, 216, ...; k_{w-1} + (L_{w-1} + 1) / 2 from w = 5 on."""
    _check_index(w)
    if w < len(_LHR_UNKNOWN_ADAPTIVE_SMALL):
        return _LHR_UNKNOWN_ADAPTIVE_SMALL[w]
    L_prev, _, _ = lhr_counts(w - 1)
    return k_sequence(w - 1) + (L_prev + 1) // 2


class BoundClass(str, enum.Enum):
    KNOWN_LIGHT = "known-light"
    KNOWN_HEAVY = "known-heavy"
    KNOWN_REAL = "known-real"
    MIXED = "mixed"
    UNKNOWN_ADAPTIVE = "unknown-adaptive"
    UNKNOWN_OBLIVIOUS = "unknown-oblivious"

    @classmethod
    def known(cls, state: CoinState) -> "BoundClass":
        return cls("known-" + state.value)

    @property
    def known_state(self) -> CoinState | None:
        if self.value.startswith("known-"):
            return CoinState(self.value[len("known-"):])
        return None


def bound(kind: CoinKind | str, scenario_class: BoundClass | str, w: int) -> int:
    """Maximal number of coins among which the fake coin can be found in ``w`` weighings.

    For the LHR coin in an unknown state under an oblivious strategy only
    ``w <= 4`` is catalogued; the value at ``w = 4`` is the proven cap of 14.
    """
    kind = parse_kind(kind)
    scenario_class = BoundClass(scenario_class)
    _check_index(w)
    state = scenario_class.known_state
    if state is not None:
        check_state(kind, state)

    if kind is CoinKind.LH:
        if state is not None or scenario_class is BoundClass.MIXED:
            return 3**w
        return 1 if w == 0 else (3**w - 1) // 2

    if kind is CoinKind.LR:
        if state is CoinState.LIGHT or scenario_class is BoundClass.MIXED:
            return jacobsthal(w + 2)
        if state is CoinState.REAL or scenario_class is BoundClass.UNKNOWN_ADAPTIVE:
            return jacobsthal(w + 1)
        return lr_unknown_oblivious(w)

    if state is not None:
        return dict(zip((CoinState.LIGHT, CoinState.HEAVY, CoinState.REAL), lhr_counts(w)))[state]
    if scenario_class is BoundClass.MIXED:
        return hr_lhr_counts(w)[1]
    if scenario_class is BoundClass.UNKNOWN_ADAPTIVE:
        return lhr_unknown_adaptive(w)
    if w < len(_LHR_UNKNOWN_OBLIVIOUS):
        return _LHR_UNKNOWN_OBLIVIOUS[w]
    raise UnsupportedBound(
        f"no oblivious bound is catalogued for an LHR coin in an unknown state at w={w} (only w <= 4)"
    )


SEQUENCE_NAMES = ("R", "H", "HR", "L", "LHR", "J", "LX", "HX", "LRX", "LHX", "LHRX", "k")


def sequence_value(name: str, n: int) -> int:
    if name == "J":
        return jacobsthal(n)
    if name == "k":
        return k_sequence(n)
    if name in ("L", "H", "R"):
        return lhr_counts(n)["LHR".index(name)]
    if name in ("HR", "LHR"):
        return hr_lhr_counts(n)[("HR", "LHR").index(name)]
    groups = ("LX", "HX", "LRX", "LHX", "LHRX")
    if name in groups:
        return xgroup_counts(n)[groups.index(name)]
    raise KeyError(f"unknown sequence {name!r}")


@dataclass(frozen=True)
class SequenceTable:
    name: str
    values: dict[int, int]


def sequence_table(name: str, n_max: int, start: int = 0) -> SequenceTable:
    return SequenceTable(name, {n: sequence_value(name, n) for n in range(start, n_max + 1)})


@dataclass
class LemmaCheck:
    statement: str
    first_index: int
    failures: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class ComparisonReport:
    n_max: int
    checks: list[LemmaCheck]
    crossover: int | None  # first n with HR_n > L_n

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_comparison_lemmas(n_max: int) -> ComparisonReport:
    """Evaluate the growth and ordering inequalities between the sequences up to ``n_max``."""
    if n_max < 10:
        raise ValueError("n_max must be at least 10 to cover the HR/L crossover")

    L = [lhr_counts(n)[0] for n in range(n_max + 1)]
    H = [lhr_counts(n)[1] for n in range(n_max + 1)]
    R = [lhr_counts(n)[2] for n in range(n_max + 1)]
    HR = [hr_lhr_counts(n)[0] for n in range(n_max + 1)]
    LHR = [hr_lhr_counts(n)[1] for n in range(n_max + 1)]
    J = jacobsthal

    predicates = [
        ("R_n < H_n < L_n", 2, lambda n: R[n] < H[n] < L[n]),
        ("2L_{n-1} < L_n and 2H_{n-1} < H_n", 3, lambda n: 2 * L[n - 1] < L[n] and 2 * H[n - 1] < H[n]),
        ("3L_{n-1} > L_n and 3H_{n-1} > H_n", 4, lambda n: 3 * L[n - 1] > L[n] and 3 * H[n - 1] > H[n]),
        ("L_n > J_{n+3}", 5, lambda n: L[n] > J(n + 3)),
        ("2R_n < HR_n", 5, lambda n: 2 * R[n] < HR[n]),
        # HR_1 = L_1 = 3; strict order holds from n = 2 and flips after n = 10.
        ("HR_n < L_n for n <= 10, HR_n > L_n for n >= 11", 2, lambda n: (HR[n] < L[n]) == (n <= 10) and HR[n] != L[n]),
        ("LHR_n mod 4 alternates 1, 3", 0, lambda n: LHR[n] % 4 == (1 if n % 2 == 0 else 3)),
    ]
    checks = []
    for statement, first, pred in predicates:
        check = LemmaCheck(statement, first)
        check.failures = [n for n in range(first, n_max + 1) if not pred(n)]
        checks.append(check)
    crossover = next((n for n in range(1, n_max + 1) if HR[n] > L[n]), None)
    return ComparisonReport(n_max, checks, crossover)

"""Exact counting of aperiodic strings and of strings by growth.

Everything here is integer arithmetic on Python ints, so the counts and
the inequalities between them are exact at any size. The only approximate
thing in this module is runtime: the growth histograms are computed by
exhaustive enumeration, guarded by an explicit budget.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cache

#: Largest number of strings an enumeration is allowed to touch by default.
DEFAULT_BUDGET = 1 << 24


class EnumerationBudgetError(ValueError):
    """Raised when an exhaustive sweep would enumerate more strings than allowed."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} strings, budget is {budget}")
        self.required = required
        self.budget = budget


def proper_divisors(j: int) -> list[int]:
    """Divisors of j smaller than j, ascending."""
    return [d for d in range(1, j // 2 + 1) if j % d == 0]


@cache
def count_aperiodic(j: int, sigma: int) -> int:
    """Number of aperiodic strings of length j over sigma symbols.

    Computed by the divisor recurrence: every string has a unique minimal
    period d | j whose first d symbols form an aperiodic string, so
    sigma^j splits as the sum of count_aperiodic(d, sigma) over d | j.
    """
    if j < 1:
        raise ValueError(f"length must be at least 1, got {j}")
    if sigma < 1:
        raise ValueError(f"alphabet size must be at least 1, got {sigma}")
    total = sigma**j
    for d in proper_divisors(j):
        total -= count_aperiodic(d, sigma)
    return total


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def aperiodic_prime_power(p: int, t: int, sigma: int) -> int:
    """Closed form for count_aperiodic(p**t, sigma): sigma^(p^t) - sigma^(p^(t-1)).

    Only valid for prime p; non-primes are rejected.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if t < 1:
        raise ValueError(f"exponent must be at least 1, got {t}")
    if sigma < 1:
        raise ValueError(f"alphabet size must be at least 1, got {sigma}")
    return sigma ** (p**t) - sigma ** (p ** (t - 1))


def count_aperiodic_bruteforce(j: int, sigma: int, budget: int = DEFAULT_BUDGET) -> int:
    """Count aperiodic strings by enumerating all sigma^j of them.

    Independent of the recurrence: each string is tested directly against
    the period definition (some proper divisor d of j with s[i] == s[i+d]
    for all i). Exists to cross-check count_aperiodic.
    """
    if j < 1:
        raise ValueError(f"length must be at least 1, got {j}")
    required = sigma**j
    if required > budget:
        raise EnumerationBudgetError(required, budget)
    divisors = proper_divisors(j)
    count = 0
    for s in itertools.product(range(sigma), repeat=j):
        for d in divisors:
            for i in range(j - d):
                if s[i] != s[i + d]:
                    break
            else:
                break  # periodic with period d
        else:
            count += 1
    return count


def growth_bound(k: int, sigma: int) -> int:
    """Upper bound on the number of length-n strings with growth k, any n >= 2k.

    Exact evaluation of
        sum_{j=1}^{k-1} count_aperiodic(j, sigma) * (sigma-1) * sigma^(k-j-1)
        + count_aperiodic(k, sigma).
    """
    if k < 1:
        raise ValueError(f"growth must be at least 1, got {k}")
    if sigma < 2:
        raise ValueError(f"alphabet size must be at least 2, got {sigma}")
    total = count_aperiodic(k, sigma)
    for j in range(1, k):
        total += count_aperiodic(j, sigma) * (sigma - 1) * sigma ** (k - j - 1)
    return total


def growth_bound_prefix_sum(m: int, sigma: int) -> int:
    """sum_{k=1}^{m} growth_bound(k, sigma); always <= (m+1) * sigma^(m+1)."""
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    return sum(growth_bound(k, sigma) for k in range(1, m + 1))


# ---------------------------------------------------------------------------
# Exhaustive growth histograms
# ---------------------------------------------------------------------------


def growth_of_digits(digits, n: int) -> int:
    """Growth of a raw digit sequence: n minus the longest common prefix
    of the sequence with any of its proper suffixes."""
    best = 0
    for j in range(1, n):
        if n - j <= best:
            break
        k = 0
        while j + k < n and digits[k] == digits[j + k]:
            k += 1
        if k > best:
            best = k
    return n - best


def _decode_base(code: int, n: int, sigma: int) -> list[int]:
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        code, digits[i] = divmod(code, sigma)
    return digits


def _growth_histogram_range(n: int, sigma: int, start: int, stop: int) -> list[int]:
    """Histogram of growth over the lexicographic range [start, stop) of
    base-sigma strings of length n. hist[k] counts strings with growth k."""
    hist = [0] * (n + 1)
    digits = _decode_base(start, n, sigma)
    for _ in range(stop - start):
        hist[growth_of_digits(digits, n)] += 1
        i = n - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < sigma:
                break
            digits[i] = 0
            i -= 1
    return hist


def growth_histogram(
    n: int,
    sigma: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> dict[int, int]:
    """Exact counts {k: number of length-n strings with growth k} for k = 1..n.

    The sigma^n strings are enumerated exhaustively, split into `workers`
    contiguous lexicographic ranges. The merged result is identical for
    any worker count because the ranges partition the string space.
    """
    if n < 1:
        raise ValueError(f"length must be at least 1, got {n}")
    if sigma < 1:
        raise ValueError(f"alphabet size must be at least 1, got {sigma}")
    total = sigma**n
    if total > budget:
        raise EnumerationBudgetError(total, budget)
    workers = max(1, min(workers, total))
    bounds = [total * w // workers for w in range(workers + 1)]
    ranges = [(bounds[w], bounds[w + 1]) for w in range(workers)]
    if workers == 1:
        hists = [_growth_histogram_range(n, sigma, 0, total)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_growth_histogram_range, n, sigma, lo, hi)
                for lo, hi in ranges
            ]
            hists = [f.result() for f in futures]
    merged = [0] * (n + 1)
    for hist in hists:
        for k, c in enumerate(hist):
            merged[k] += c
    return {k: merged[k] for k in range(1, n + 1)}


def count_with_growth(n: int, k: int, sigma: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of length-n strings over sigma symbols with growth exactly k."""
    if not 1 <= k <= n:
        raise ValueError(f"growth {k} out of range 1..{n}")
    return growth_histogram(n, sigma, budget=budget)[k]


# ---------------------------------------------------------------------------
# Growth-bound verification sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthBoundRow:
    n: int
    k: int
    count: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.count <= self.bound


@dataclass
class GrowthBoundReport:
    sigma: int
    rows: list[GrowthBoundRow] = field(default_factory=list)
    partition_failures: list[int] = field(default_factory=list)

    @property
    def violations(self) -> list[GrowthBoundRow]:
        return [row for row in self.rows if not row.holds]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.partition_failures


def check_growth_bound(
    sigma: int,
    k_max: int,
    n_max: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> GrowthBoundReport:
    """Compare exhaustive growth counts against growth_bound.

    For every k <= k_max and every n with 2k <= n <= n_max the exhaustive
    count must not exceed the bound. Also checks, for every enumerated n,
    that the histogram sums to sigma^n (the growth values partition all
    strings).
    """
    report = GrowthBoundReport(sigma=sigma)
    bounds = {k: growth_bound(k, sigma) for k in range(1, k_max + 1)}
    for n in range(2, n_max + 1):
        hist = growth_histogram(n, sigma, budget=budget, workers=workers)
        if sum(hist.values()) != sigma**n:
            report.partition_failures.append(n)
        for k in range(1, min(k_max, n // 2) + 1):
            report.rows.append(GrowthBoundRow(n=n, k=k, count=hist[k], bound=bounds[k]))
    return report


# ---------------------------------------------------------------------------
# Reference table and export
# ---------------------------------------------------------------------------

#: Hand-transcribed reference values for count_aperiodic(j, sigma),
#: sigma 2..5 and j 1..8, kept exactly as printed in the source they were
#: copied from. Two entries are transcription defects; see KNOWN_ERRATA.
REFERENCE_APERIODIC_TABLE = {
    2: (2, 6, 12, 30, 54, 126, 240, 504),
    3: (3, 6, 24, 72, 240, 696, 2184, 648),
    4: (4, 12, 60, 240, 1020, 4020, 16380, 65280),
    5: (5, 20, 120, 600, 3120, 15480, 78120, 390000),
}

#: Documented defects in the reference table. The recurrence (cross-checked
#: by exhaustive enumeration) is authoritative:
#:   - the sigma=2 row is shifted: it prints the counts for lengths
#:     1, 3, 4, ..., 9 instead of 1..8 (one known errata event);
#:   - the sigma=3, j=8 cell prints 648 where the count is 6480 (a
#:     dropped digit).
KNOWN_ERRATA = {
    "sigma2_row_shifted": {(2, j) for j in range(2, 9)},
    "sigma3_j8_dropped_digit": {(3, 8)},
}


@dataclass(frozen=True)
class TableDiscrepancy:
    sigma: int
    j: int
    published: int
    computed: int
    errata: str | None

    @property
    def known(self) -> bool:
        return self.errata is not None


def reference_table_discrepancies() -> list[TableDiscrepancy]:
    """Cells of the reference table that disagree with the recurrence.

    Each discrepancy is tagged with the errata entry that explains it,
    or left untagged (known=False) if it is unexplained. An unexplained
    discrepancy means either the table constant or the recurrence code
    was broken, and verification must fail.
    """
    out = []
    for sigma, row in sorted(REFERENCE_APERIODIC_TABLE.items()):
        for j, published in enumerate(row, start=1):
            computed = count_aperiodic(j, sigma)
            if published == computed:
                continue
            errata = None
            for name, cells in KNOWN_ERRATA.items():
                if (sigma, j) in cells:
                    errata = name
                    break
            out.append(
                TableDiscrepancy(
                    sigma=sigma, j=j, published=published, computed=computed, errata=errata
                )
            )
    return out


@dataclass(frozen=True)
class CountTable:
    """Export container for exact counts.

    kind "aperiodic": entries map length j -> count;
    kind "growth_bound": entries map growth k -> bound;
    kind "growth_count": entries map (n, k) -> count.
    """

    kind: str
    sigma: int
    entries: dict

    KINDS = ("aperiodic", "growth_bound", "growth_count")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown table kind {self.kind!r}")

    def rows(self) -> list[tuple[str, str, str, str]]:
        """Rows (sigma, j_or_n, k, value) with exact decimal values."""
        out = []
        if self.kind == "aperiodic":
            for j in sorted(self.entries):
                out.append((str(self.sigma), str(j), "", str(self.entries[j])))
        elif self.kind == "growth_bound":
            for k in sorted(self.entries):
                out.append((str(self.sigma), "", str(k), str(self.entries[k])))
        else:
            for n, k in sorted(self.entries):
                out.append((str(self.sigma), str(n), str(k), str(self.entries[(n, k)])))
        return out

    def to_csv(self) -> str:
        lines = ["sigma,j_or_n,k,value"]
        lines.extend(",".join(row) for row in self.rows())
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "kind": self.kind,
            "sigma": self.sigma,
            "rows": [
                {"sigma": r[0], "j_or_n": r[1], "k": r[2], "value": r[3]}
                for r in self.rows()
            ],
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def _from_rows(cls, rows: list[tuple[str, str, str, str]]) -> "CountTable":
        if not rows:
            raise ValueError("cannot rebuild a table from zero rows")
        sigma = int(rows[0][0])
        entries: dict = {}
        kind = None
        for sig, j_or_n, k, value in rows:
            if int(sig) != sigma:
                raise ValueError("mixed sigma values in one table")
            if j_or_n and k:
                kind = "growth_count"
                entries[(int(j_or_n), int(k))] = int(value)
            elif j_or_n:
                kind = "aperiodic"
                entries[int(j_or_n)] = int(value)
            else:
                kind = "growth_bound"
                entries[int(k)] = int(value)
        return cls(kind=kind, sigma=sigma, entries=entries)

    @classmethod
    def from_csv(cls, text: str) -> "CountTable":
        lines = [line for line in text.splitlines() if line]
        if not lines or lines[0] != "sigma,j_or_n,k,value":
            raise ValueError("missing count-table header")
        rows = [tuple(line.split(",")) for line in lines[1:]]
        return cls._from_rows(rows)  # type: ignore[arg-type]

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        payload = json.loads(text)
        rows = [
            (r["sigma"], r["j_or_n"], r["k"], r["value"]) for r in payload["rows"]
        ]
        return cls._from_rows(rows)


def aperiodic_table(sigma: int, max_j: int) -> CountTable:
    return CountTable(
        kind="aperiodic",
        sigma=sigma,
        entries={j: count_aperiodic(j, sigma) for j in range(1, max_j + 1)},
    )


def growth_bound_table(sigma: int, max_k: int) -> CountTable:
    return CountTable(
        kind="growth_bound",
        sigma=sigma,
        entries={k: growth_bound(k, sigma) for k in range(1, max_k + 1)},
    )

"""Lower bounds on the domination number of Q_n, in exact rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cube import MAX_DIM, check_dim


@dataclass(frozen=True)
class Bound:
    numerator: int
    denominator: int

    @classmethod
    def of(cls, num: int, den: int) -> "Bound":
        f = Fraction(num, den)
        return cls(f.numerator, f.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def ceiling(self) -> int:
        return -(-self.numerator // self.denominator)

    def as_dict(self) -> dict:
        return {"numerator": self.numerator, "denominator": self.denominator, "ceiling": self.ceiling}


@dataclass(frozen=True)
class BoundReport:
    n: int
    sphere: Bound
    vanwee: Bound | None
    theorem2: Bound | None

    @property
    def best_lower(self) -> int:
        return max(b.ceiling for b in (self.sphere, self.vanwee, self.theorem2) if b is not None)

    def as_dict(self) -> dict:
        d = {"n": self.n, "sphere": self.sphere.as_dict()}
        if self.vanwee is not None:
            d["vanwee"] = self.vanwee.as_dict()
        if self.theorem2 is not None:
            d["theorem2"] = self.theorem2.as_dict()
        d["best_lower"] = self.best_lower
        return d


def _require_mod6(n: int) -> None:
    if n % 6:
        raise ValueError(f"bound only stated for n divisible by 6 (got n={n})")


def sphere_covering_bound(n: int) -> Bound:
    """2^n / (n+1): total excess is nonnegative."""
    n = check_dim(n)
    return Bound.of(1 << n, n + 1)


def vanwee_bound(n: int) -> Bound:
    """2^n / n, van Wee's bound for n divisible by 6."""
    n = check_dim(n)
    _require_mod6(n)
    return Bound.of(1 << n, n)


def theorem2_bound(n: int) -> Bound:
    """(n-2) 2^n / (n^2 - 2n - 2) for n divisible by 6."""
    n = check_dim(n)
    _require_mod6(n)
    return Bound.of((n - 2) << n, n * n - 2 * n - 2)


def bound_report(n: int) -> BoundReport:
    n = check_dim(n)
    if n % 6 == 0:
        return BoundReport(n, sphere_covering_bound(n), vanwee_bound(n), theorem2_bound(n))
    return BoundReport(n, sphere_covering_bound(n), None, None)


def bound_table(n_from: int, n_to: int) -> list[BoundReport]:
    if not 1 <= n_from <= n_to <= MAX_DIM:
        raise ValueError(f"need 1 <= from <= to <= {MAX_DIM}, got {n_from}..{n_to}")
    return [bound_report(n) for n in range(n_from, n_to + 1)]


def format_table(rows: list[BoundReport]) -> str:
    lines = [f"{'n':>3} {'sphere':>10} {'vanwee':>10} {'theorem2':>10} {'best':>10}"]
    for r in rows:
        vw = str(r.vanwee.ceiling) if r.vanwee else "-"
        t2 = str(r.theorem2.ceiling) if r.theorem2 else "-"
        lines.append(f"{r.n:>3} {r.sphere.ceiling:>10} {vw:>10} {t2:>10} {r.best_lower:>10}")
    return "\n".join(lines)

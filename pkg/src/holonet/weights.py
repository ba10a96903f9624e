"""Dominant weights of affine SU(n) at level k and their combinatorics.

A weight is stored by its Dynkin labels (lambda_1, ..., lambda_{n-1}); the
affine label lambda_0 = k - sum(labels) is implicit and must be >= 0.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class AffineWeight:
    """A level-k dominant weight of SU(n), given by Dynkin labels."""

    n: int
    k: int
    labels: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank must be >= 2, got n={self.n}")
        if self.k < 1:
            raise ValueError(f"level must be >= 1, got k={self.k}")
        labels = tuple(int(a) for a in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} labels, got {len(labels)}")
        if any(a < 0 for a in labels):
            raise ValueError(f"negative Dynkin label in {labels}")
        if sum(labels) > self.k:
            raise ValueError(f"labels {labels} exceed level {self.k}")

    @property
    def label_zero(self):
        """The affine label lambda_0 = k - sum(labels)."""
        return self.k - sum(self.labels)

    @property
    def extended(self):
        """All n labels (lambda_0, lambda_1, ..., lambda_{n-1})."""
        return (self.label_zero,) + self.labels

    def simple_current(self, power=1):
        """Rotate the extended labels by `power` steps.

        The generator J sends (lambda_1, ..., lambda_{n-1}) to
        (lambda_0, lambda_1, ..., lambda_{n-2}); J^n is the identity.
        """
        ext = self.extended
        a = power % self.n
        rotated = ext[-a:] + ext[:-a] if a else ext
        return AffineWeight(self.n, self.k, rotated[1:])

    def conjugate(self):
        """The conjugate weight: labels reversed."""
        return AffineWeight(self.n, self.k, self.labels[::-1])

    @property
    def color(self):
        """The n-ality sum(i * lambda_i) mod n; 0 on the root lattice."""
        return sum(i * a for i, a in enumerate(self.labels, start=1)) % self.n

    @property
    def partition(self):
        """Partition coordinates p_i = lambda_i + ... + lambda_{n-1}, p_n = 0."""
        p = []
        total = 0
        for a in reversed(self.labels):
            total += a
            p.append(total)
        p.reverse()
        return tuple(p) + (0,)

    def conformal_weight(self):
        """Exact conformal weight h, a rational with denominator | 2n(k+n)."""
        n, k, lam = self.n, self.k, self.labels
        kappa = k + n
        quad = sum(i * (n - i) * lam[i - 1] ** 2 for i in range(1, n))
        cross = sum(
            j * (n - i) * lam[j - 1] * lam[i - 1]
            for i in range(2, n)
            for j in range(1, i)
        )
        lin = sum(j * (n - j) * lam[j - 1] for j in range(1, n))
        return (
            Fraction(quad, 2 * n * kappa)
            + Fraction(cross, n * kappa)
            + Fraction(lin, 2 * kappa)
        )

    def __str__(self):
        return ",".join(str(a) for a in self.labels)


def enumerate_weights(n, k):
    """All level-k dominant weights of SU(n), lexicographic, vacuum first."""
    if n < 2:
        raise ValueError(f"rank must be >= 2, got n={n}")
    if k < 1:
        raise ValueError(f"level must be >= 1, got k={k}")
    out = []

    def fill(prefix, budget, slots):
        if slots == 0:
            out.append(AffineWeight(n, k, prefix))
            return
        for a in range(budget + 1):
            fill(prefix + (a,), budget - a, slots - 1)

    fill((), k, n - 1)
    return out


def weight_count(n, k):
    """Number of level-k dominant weights of SU(n) (stars and bars)."""
    from math import comb

    return comb(n - 1 + k, n - 1)


def weight_from_text(n, k, text):
    """Parse the text form 'a1,a2,...' into an AffineWeight."""
    parts = [s for s in text.strip().split(",") if s != ""]
    return AffineWeight(n, k, tuple(int(s) for s in parts))


def simple_current(weight, power=1):
    return weight.simple_current(power)


def conjugate(weight):
    return weight.conjugate()


def color(weight):
    return weight.color

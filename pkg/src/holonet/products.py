"""Tensor products of theories with a factorized S action.

Labels of a product are tuples of factor labels; h and c add, dimensions
and fusion multiply componentwise.  The product S-matrix is never
materialized: contractions act factor by factor along the corresponding
tensor axis, which keeps the 2640-label products cheap and accurate.
"""

import itertools
from fractions import Fraction

import numpy as np

from .modular import SectorVector


class UnsupportedFusionError(KeyError):
    """Fusion requested outside a catalog's stored table."""


class ProductTheory:
    """Tensor product of modular data and/or extension catalogs."""

    def __init__(self, factors, name=None):
        if len(factors) < 2:
            raise ValueError("a tensor product needs at least 2 factors")
        self.factors = tuple(factors)
        self.name = name or " (x) ".join(f.name for f in factors)
        self.shape = tuple(len(f.labels) for f in factors)
        self.labels = [
            combo for combo in itertools.product(*(f.labels for f in factors))
        ]
        self.index = {label: i for i, label in enumerate(self.labels)}
        self._mu_exact = None
        exact = [f.mu_exact for f in factors]
        if all(x is not None for x in exact):
            self._mu_exact = _product(exact)

    @property
    def size(self):
        return len(self.labels)

    @property
    def vacuum(self):
        return tuple(f.vacuum for f in self.factors)

    @property
    def has_s(self):
        return all(f.has_s for f in self.factors)

    @property
    def mu(self):
        return float(np.prod([f.mu for f in self.factors]))

    @property
    def mu_exact(self):
        return self._mu_exact

    @property
    def c(self):
        parts = [getattr(f, "c", None) for f in self.factors]
        if any(p is None for p in parts):
            return None
        return sum(parts, Fraction(0))

    def h_mod1(self, label):
        return sum(
            (f.h_mod1(x) for f, x in zip(self.factors, label)), Fraction(0)
        ) % 1

    def h_exact(self, label):
        parts = []
        for f, x in zip(self.factors, label):
            h = getattr(f, "h_exact", None)
            if h is None:
                return None
            parts.append(h(x))
        return sum(parts, Fraction(0))

    def dim(self, label):
        return float(np.prod([f.dim(x) for f, x in zip(self.factors, label)]))

    def dim_sq_of(self, label):
        out = Fraction(1)
        for f, x in zip(self.factors, label):
            sq = getattr(f, "dim_sq_of", None)
            part = sq(x) if sq else None
            if part is None:
                return None
            out *= part
        return out

    def conj(self, label):
        return tuple(f.conj(x) for f, x in zip(self.factors, label))

    def fuse(self, a, b):
        """Componentwise fusion; {label: multiplicity} over tuple labels."""
        per_factor = [
            f.fuse(x, y) for f, x, y in zip(self.factors, a, b)
        ]
        out = {}
        for combo in itertools.product(*(d.items() for d in per_factor)):
            label = tuple(x for x, _ in combo)
            m = 1
            for _, mm in combo:
                m *= mm
            out[label] = out.get(label, 0) + m
        return out

    def fusion(self, a, b):
        return SectorVector(self, self.fuse(a, b))

    # -- factorized linear algebra ----------------------------------------

    def apply_s(self, vec):
        """Apply the (symmetric) product S-matrix to a vector, factor-wise."""
        if not self.has_s:
            raise UnsupportedFusionError(
                f"{self.name}: a factor has no S-matrix"
            )
        cube = np.asarray(vec, dtype=complex).reshape(self.shape)
        for axis, f in enumerate(self.factors):
            cube = np.tensordot(f.S, cube, axes=([1], [axis]))
            cube = np.moveaxis(cube, 0, axis)
        return cube.reshape(-1)

    def s_column(self, label):
        """Column of the product S-matrix at `label` (Kronecker of columns)."""
        if not self.has_s:
            raise UnsupportedFusionError(
                f"{self.name}: a factor has no S-matrix"
            )
        cols = [
            f.S[:, f.index[x]] for f, x in zip(self.factors, label)
        ]
        out = cols[0]
        for col in cols[1:]:
            out = np.kron(out, col)
        return out

    def __repr__(self):
        return f"ProductTheory({self.name}, {self.size} labels)"


def _product(values):
    out = values[0]
    for v in values[1:]:
        out = out * v
    return out


def tensor_product(*factors, name=None):
    """Tensor product of two or more theories."""
    return ProductTheory(factors, name=name)

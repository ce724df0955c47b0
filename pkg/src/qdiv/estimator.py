"""scikit-learn compatible front end to the divider circuit.

Example:
    >>> div = RestoringDivider(n_bits=4).fit()
    >>> div.predict([[13, 3], [7, 2]])
    array([[4, 1],
           [3, 1]])
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .arith import build_divider
from .circuit import Level
from .domain import simulate
from .errors import DivisionByZero, DomainViolation
from .lowering import lower
from .refmodel import max_divisor
from .resources import count


class RestoringDivider(TransformerMixin, BaseEstimator):
    """Divide integer pairs by simulating the synthesized circuit.

    Parameters
    ----------
    n_bits : int
        Operand width; the circuit uses ``3 * n_bits`` qubits.
    level : {"logical", "toffoli"}
        Level at which the circuit is simulated.  Clifford+T circuits are
        not permutation circuits and are rejected by basis simulation.

    Attributes
    ----------
    instance_ : DividerInstance
    circuit_ : Circuit
        The circuit at ``level``.
    resources_ : ResourceReport
    """

    def __init__(self, n_bits: int = 4, level: str = "logical"):
        self.n_bits = n_bits
        self.level = level

    def fit(self, X=None, y=None):
        level = Level.parse(self.level)
        if level is Level.CLIFFORD_T:
            raise ValueError("Clifford+T circuits cannot be simulated per basis state")
        self.instance_ = build_divider(int(self.n_bits))
        self.circuit_ = lower(self.instance_.circuit, level)
        self.resources_ = count(self.circuit_, self.instance_.ancillae, n=self.instance_.n)
        return self

    def _validate(self, X) -> np.ndarray:
        X = check_array(X, dtype=np.int64, ensure_min_features=2)
        if X.shape[1] != 2:
            raise ValueError(f"expected (dividend, divisor) columns, got {X.shape[1]}")
        n = self.instance_.n
        if np.any(X[:, 1] == 0):
            raise DivisionByZero("divisor must be non-zero")
        if np.any((X[:, 0] < 0) | (X[:, 0] >= 1 << n)):
            raise DomainViolation(f"dividends must lie in [0, {(1 << n) - 1}]")
        if np.any((X[:, 1] < 1) | (X[:, 1] > max_divisor(n))):
            raise DomainViolation(f"divisors must lie in [1, {max_divisor(n)}]")
        return X

    def transform(self, X):
        """Return ``(quotient, remainder, divisor_out)`` per row."""
        check_is_fitted(self, "instance_")
        X = self._validate(X)
        inst = self.instance_
        if self.circuit_ is not inst.circuit:
            inst = type(inst)(inst.n, self.circuit_, inst.layout)
        q, r, d = simulate(inst, X[:, 0], X[:, 1])
        return np.column_stack([q, r, d]).astype(np.int64)

    def predict(self, X):
        return self.transform(X)[:, :2]

    def score(self, X, y=None):
        """Fraction of rows where the circuit agrees with integer divmod."""
        X = self._validate(X)
        pred = self.predict(X)
        expected = np.column_stack([X[:, 0] // X[:, 1], X[:, 0] % X[:, 1]])
        return float(np.mean(np.all(pred == expected, axis=1)))

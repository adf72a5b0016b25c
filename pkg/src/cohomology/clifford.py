"""
Clifford Module
Signed lifts of permutations into the Clifford algebra of a positive definite form, mod 3
"""
import threading
from typing import Dict

import numpy as np

from src.groups.permutation import Permutation
from src.groups.presentations import factor_coxeter

_MODULUS = 3


class CliffordLift:
    """
    t(σ) = product of (e_q - e_{q+1}) over the insertion-sort word of σ in S_m.

    Elements are arrays of length 2^m indexed by monomial bitmasks, reduced mod 3.
    Since the squared norm of t(σ) is a power of 2, t(σ) never vanishes mod 3 and the
    sign in t(σ)t(τ) = ±2^a t(στ) survives reduction.
    """

    def __init__(self, m: int):
        if m > 16:
            raise ValueError(f"Clifford lift for S_{m} would need 2^{m} coordinates")
        self.m = m
        masks = np.arange(1 << m, dtype=np.int64)
        self._flip = []
        self._sign = []
        for i in range(m):
            higher = masks >> (i + 1)
            count = np.zeros_like(masks)
            for b in range(m - i - 1):
                count += (higher >> b) & 1
            self._flip.append(masks ^ (1 << i))
            self._sign.append(np.where(count % 2, -1, 1).astype(np.int64))
        self._cache: Dict[bytes, np.ndarray] = {}
        self._lengths: Dict[bytes, int] = {}
        self._lock = threading.Lock()

    def _times_generator(self, x: np.ndarray, i: int) -> np.ndarray:
        """x·e_i: monomial A goes to A xor {i} with sign (-1)^|{a in A: a > i}|"""
        y = np.zeros_like(x)
        y[self._flip[i]] = x * self._sign[i]
        return y

    def times_letter(self, x: np.ndarray, q: int) -> np.ndarray:
        """x·(e_{q-1} - e_q) for the Coxeter letter q = (q, q+1) in 1-based points"""
        return np.mod(self._times_generator(x, q - 1) - self._times_generator(x, q), _MODULUS)

    def lift(self, sigma: Permutation) -> np.ndarray:
        cached = self._cache.get(sigma.key)
        if cached is not None:
            return cached
        word = factor_coxeter(sigma)
        x = np.zeros(1 << self.m, dtype=np.int64)
        x[0] = 1
        for q in word:
            x = self.times_letter(x, abs(q))
        with self._lock:
            self._cache[sigma.key] = x
            self._lengths[sigma.key] = len(word)
        return x

    def length(self, sigma: Permutation) -> int:
        if sigma.key not in self._lengths:
            self.lift(sigma)
        return self._lengths[sigma.key]

    def sign_bit(self, sigma: Permutation, tau: Permutation) -> int:
        """1 when t(σ)t(τ) = -2^a t(στ), else 0"""
        product = self.lift(sigma)
        for q in factor_coxeter(tau):
            product = self.times_letter(product, abs(q))
        target = self.lift(sigma * tau)
        lead = int(np.flatnonzero(target)[0])
        lam = (int(product[lead]) * int(target[lead])) % _MODULUS
        a = (self.length(sigma) + self.length(tau) - self.length(sigma * tau)) // 2
        power = pow(2, a, _MODULUS)
        return 0 if (lam * power) % _MODULUS == 1 else 1


_lifts: Dict[int, CliffordLift] = {}
_lifts_lock = threading.Lock()


def get_clifford_lift(m: int) -> CliffordLift:
    """Get or create the shared lift for S_m"""
    with _lifts_lock:
        if m not in _lifts:
            _lifts[m] = CliffordLift(m)
        return _lifts[m]

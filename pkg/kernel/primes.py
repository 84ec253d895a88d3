"""
Prime tables and the analytic truncation bound of the prime-power series

    Σ_p Σ_k p^(−kc) / (k² log p)  =  ∫_c^∞ log ζ(σ) dσ.
"""

import math
from functools import lru_cache

import numpy as np
from sympy import sieve


@lru_cache(maxsize=8)
def prime_table(cutoff: int) -> np.ndarray:
    """
    All primes p ≤ cutoff as a read-only float array.

    Args:
        cutoff: Largest admissible prime

    Returns:
        Sorted array of primes
    """
    primes = np.fromiter(sieve.primerange(2, cutoff + 1), dtype=float)
    primes.setflags(write=False)
    return primes


def series_tail_bound(c: float, prime_cutoff: int, power_cutoff: int) -> float:
    """
    Upper bound on what the prime-power series omits at the given cutoffs.

    Two pieces: primes above the cutoff (all powers), and powers above
    power_cutoff of the primes that are kept.

    Args:
        c: Abscissa, c > 1
        prime_cutoff: Largest prime summed
        power_cutoff: Largest exponent summed

    Returns:
        Bound on the absolute truncation error
    """
    P = float(max(prime_cutoff, 2))
    # Σ_{p>P} Σ_k p^{-kc}/(k² log p) ≤ Σ_{n>P} n^{-c} / (log P (1 − P^{-c}))
    prime_tail = P ** (1.0 - c) / ((c - 1.0) * math.log(P) * (1.0 - P ** (-c)))

    # Σ_{p≤P} Σ_{k>K} p^{-kc}/(k² log p) ≤ Σ_{n≥2} n^{-s} / ((K+1)² log 2 (1 − 2^{-c})), s = (K+1)c
    K1 = power_cutoff + 1
    s = K1 * c
    dirichlet_tail = 2.0 ** (-s) + 2.0 ** (1.0 - s) / (s - 1.0)
    power_tail = dirichlet_tail / (K1 ** 2 * math.log(2.0) * (1.0 - 2.0 ** (-c)))

    return prime_tail + power_tail

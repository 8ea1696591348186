"""Brute-force reference computations used to check the library.

Nothing here touches the bitmask machinery in ``semispace.worlds`` or the
merging in its prime-implicant routine: worlds are explicit dicts,
implicants come from enumerating all 3**n cubes, and placements are
recomputed straight from their definitions.
"""

import itertools
import math
from fractions import Fraction

from semispace.formula import evaluate


def assignments(names):
    """All assignments, all-true first (truth-table order)."""
    for values in itertools.product((True, False), repeat=len(names)):
        yield dict(zip(names, values))


def true_assignments(formula, names):
    return [a for a in assignments(names) if evaluate(formula, a)]


def world_key(a, names):
    return tuple(a[x] for x in names)


def all_cubes(names):
    """Every product term as a dict atom -> polarity (absent atoms omitted)."""
    for choice in itertools.product((None, True, False), repeat=len(names)):
        yield {x: v for x, v in zip(names, choice) if v is not None}


def cube_holds(cube, a):
    return all(a[x] == v for x, v in cube.items())


def prime_cubes(true_keys, names):
    """Prime implicants of the world set ``true_keys`` by exhaustive search."""
    worlds = list(assignments(names))

    def implies(cube):
        return all(world_key(a, names) in true_keys for a in worlds if cube_holds(cube, a))

    implicants = [c for c in all_cubes(names) if implies(c)]
    primes = []
    for c in implicants:
        if not any(implies({x: v for x, v in c.items() if x != drop}) for drop in c):
            primes.append(c)
    return primes


def cube_literals(cubes):
    return {(x, v) for c in cubes for x, v in c.items()}


def oracle_profile(true_keys, names, actual):
    """(t, f) from the prime-implicant literals, with the 1/1 rule for the extremes."""
    if len(true_keys) in (0, 2 ** len(names)):
        return 1, 1
    lits = cube_literals(prime_cubes(true_keys, names))
    t = sum(1 for x, v in lits if actual[x] == v)
    return t, len(lits) - t


def oracle_placement(true_keys, names, actual):
    """Direct recomputation of radius, angle and measures for one world set."""
    m = 2 ** len(names)
    size = len(true_keys)
    holds = world_key(actual, names) in true_keys
    k = size - 1 if holds else (m - size) - 1
    r = Fraction(1) if size in (0, m) else Fraction(k, m)
    t, f = oracle_profile(true_keys, names, actual)
    q = Fraction(f, t + f)
    theta = math.pi / 2 * f / (t + f)
    theta_t = float(r) * math.cos(theta)
    theta_f = float(r) * math.sin(theta)
    return {
        "k": k,
        "r": r,
        "q": q,
        "t": t,
        "f": f,
        "phi_i": 1 - r * r,
        "phi_u_float": theta_t ** 2,
        "phi_m_float": theta_f ** 2,
        "theta_t": theta_t,
        "theta_f": theta_f,
    }

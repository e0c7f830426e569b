"""Seeded corpora of catalog surfaces and divisor classes shared by tests."""
from __future__ import annotations

import random
from functools import lru_cache

from divcalc import (DivisorClass, make_del_pezzo_blowup, make_hirzebruch,
                     make_projective_plane)
from divcalc.lattice import IntersectionForm, combine
from divcalc.surface import Curve, SurfaceInvariants, SurfaceModel


@lru_cache(maxsize=None)
def catalog_surfaces(max_rank: int = 6):
    """Built-in surfaces with complete curve data and rank <= ``max_rank``."""
    out = [make_projective_plane()]
    out += [make_hirzebruch(n) for n in range(5)]
    out += [make_del_pezzo_blowup(r) for r in range(1, 9) if r + 1 <= max_rank]
    return tuple(out)


def random_effective(model, rng: random.Random, top: int = 4) -> DivisorClass:
    """A random nonzero nonnegative integer combination of the generators."""
    gens = model.generator_classes
    while True:
        coeffs = [rng.randint(0, top) if rng.random() < 0.6 else 0 for _ in gens]
        if any(coeffs):
            return combine(coeffs, gens, model.rank)


def pseudoeffective_corpus(n: int = 200, seed: int = 20261015):
    rng = random.Random(seed)
    surfaces = catalog_surfaces()
    return [(m, random_effective(m, rng)) for m in (surfaces[i % len(surfaces)] for i in range(n))]


def nef_big_corpus(n: int = 100, seed: int = 7):
    """Nef and big classes: nonnegative combinations of each surface's nef generators."""
    rng = random.Random(seed)
    gens_by_surface = []
    for m in catalog_surfaces():
        gens_by_surface.append((m, nef_generators(m)))
    out = []
    i = 0
    while len(out) < n:
        m, gens = gens_by_surface[i % len(gens_by_surface)]
        i += 1
        coeffs = [rng.randint(0, 2) for _ in gens]
        d = combine(coeffs, gens, m.rank)
        if m.square(d) > 0 and all(m.pair(d, g) >= 0 for g in m.generator_classes):
            out.append((m, d))
    return out


def nef_generators(model):
    """Explicit nef classes spanning a full-dimensional part of the nef cone."""
    name = model.name
    r = model.rank
    if name == "p2":
        return [DivisorClass((1,))]
    if name.startswith("hirzebruch"):
        n = -int(model.form.matrix[0][0])
        return [DivisorClass((0, 1)), DivisorClass((1, n))]
    # blowups of the plane: H, H - E_i, 2H - sum of up to five E_i, and -K
    h = DivisorClass.basis(r, 0)
    out = [h]
    for i in range(1, r):
        out.append(h - DivisorClass.basis(r, i))
    out.append(-model.canonical)
    return out


@lru_cache(maxsize=None)
def shell_surfaces():
    from divcalc import make_shell

    return (
        make_shell("abelian", [[0, 1], [1, 0]], polarization=[1, 1]),
        make_shell("k3", [[2]], polarization=[1]),
        make_shell("enriques", [[0, 1], [1, 0]], polarization=[1, 1]),
        make_shell("general_type", [[1, 0], [0, -1]], char_p=3, canonical=[3, -1],
                   polarization=[1, 0], chi_O=1, volume=8),
    )


def prover_corpus(n: int = 100, seed: int = 99):
    """Mixed (surface, divisor) pairs: effective, non-effective, rational, shells."""
    rng = random.Random(seed)
    surfaces = list(catalog_surfaces()) + list(shell_surfaces())
    out = []
    for i in range(n):
        m = surfaces[i % len(surfaces)]
        kind = rng.random()
        if m.effective_cone_polyhedral:
            d = random_effective(m, rng, top=3)
            if kind < 0.15:
                d = -d
            elif kind < 0.35:
                d = d / 2
        else:
            d = DivisorClass(tuple(rng.randint(-1, 3) for _ in range(m.rank)))
        out.append((m, d))
    return out


@lru_cache(maxsize=None)
def synthetic_three_curves():
    """A lattice-only curve configuration (not claimed to be geometric) whose
    negative parts have fractional coefficients of mixed size, so the
    roundup step alone leaves a positive pairing to repair."""
    form = IntersectionForm(((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1)))
    vecs = [(0, -1, 1, -1), (1, 2, 0, 0), (-2, -1, 1, 2), (1, 0, 0, 0)]
    curves = tuple(Curve(DivisorClass(v), True, name=f"C{i}") for i, v in enumerate(vecs))
    inv = SurfaceInvariants(char_p=2, kodaira_dim=-10, chi_O=1, q=0)
    return SurfaceModel(form, DivisorClass((-3, 1, 1, 1)), curves, (0, 1, 2, 3), inv,
                        negative_curves_complete=True, effective_cone_polyhedral=True,
                        name="synthetic")

#!/usr/bin/env python3
"""Residual battery over the closed-form families and random systems.

Prints one row per check with the worst observed residual, so a glance
shows how much headroom each identity has.  Use --json for a
machine-readable dump of the same numbers.
"""

import argparse
import json

import numpy as np

from popuc import (
    PersymmetricSeed,
    VerblunskySequence,
    build_system,
    cmv_matrix,
    free_family,
    krawtchouk_family,
    laurent_eigenvector,
    make_persymmetric,
    orthogonality_residual,
    paraorthogonality_residual,
    single_moment,
    single_moment_dual,
    single_moment_persymmetric,
    spectrum,
    unitarity_residual,
    verify_family,
    verify_mirror_relations,
    verify_persymmetry_characterizations,
    weights,
)


def random_verblunsky(rng, n, max_mag=0.85):
    mags = max_mag * np.sqrt(rng.uniform(0.0, 1.0, size=n))
    args = rng.uniform(0.0, 2.0 * np.pi, size=n)
    omega = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    return VerblunskySequence(mags * np.exp(1j * args), omega)


def family_rows(n_values):
    rows = []
    for n in n_values:
        for inst in (
            free_family(n, nu=0.3),
            single_moment(n),
            single_moment_dual(n),
            single_moment_persymmetric(n),
            krawtchouk_family(n, np.exp(0.9j)),
        ):
            report = verify_family(inst)
            rows.append((f"{inst.name} n={n}", max(report.values()), report))
    return rows


def random_rows(seed, count, n_max):
    rng = np.random.default_rng(seed)
    worst = {
        "orthogonality": 0.0,
        "paraorthogonality": 0.0,
        "cmv unitarity": 0.0,
        "cmv eigenpairs": 0.0,
        "mirror relations": 0.0,
    }
    for _ in range(count):
        v = random_verblunsky(rng, int(rng.integers(1, n_max + 1)))
        sys_ = build_system(v)
        nodes = spectrum(sys_)
        data = weights(sys_, nodes)
        worst["orthogonality"] = max(worst["orthogonality"], orthogonality_residual(sys_, data))
        worst["paraorthogonality"] = max(
            worst["paraorthogonality"], paraorthogonality_residual(sys_)
        )
        u = cmv_matrix(v)
        worst["cmv unitarity"] = max(worst["cmv unitarity"], unitarity_residual(u))
        for node in nodes:
            psi = laurent_eigenvector(sys_, node).components
            resid = float(np.max(np.abs(u @ psi - complex(node) * psi)))
            worst["cmv eigenpairs"] = max(
                worst["cmv eigenpairs"], resid / max(1.0, float(np.max(np.abs(psi))))
            )
        worst["mirror relations"] = max(
            worst["mirror relations"], verify_mirror_relations(v).max_residual
        )
    return [(f"random ({count} draws, n <= {n_max}): {k}", v, None) for k, v in worst.items()]


def persymmetric_rows(seed, count, n_max):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        half = 0.8 * np.sqrt(rng.uniform(0.0, 1.0, size=n // 2))
        args = rng.uniform(0.0, 2.0 * np.pi, size=n // 2)
        omega = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
        seed_obj = PersymmetricSeed(
            half * np.exp(1j * args),
            omega,
            n,
            middle_r=float(rng.uniform(-0.8, 0.8)) if n % 2 else None,
        )
        v = make_persymmetric(seed_obj)
        report = verify_persymmetry_characterizations(v)
        worst = max(worst, report.max_residual)
    return [(f"persymmetric characterizations ({count} draws, n <= {n_max})", worst, None)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--count", type=int, default=60, help="random draws per battery")
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    args = parser.parse_args()

    rows = []
    rows.extend(family_rows((2, 5, 9)))
    rows.extend(random_rows(args.seed, args.count, args.n_max))
    rows.extend(persymmetric_rows(args.seed + 1, args.count, args.n_max))

    if args.json:
        print(json.dumps({name: value for name, value, _ in rows}, indent=2, sort_keys=True))
        return

    width = max(len(name) for name, _, _ in rows)
    print(f"{'check':<{width}}  worst residual")
    print("-" * (width + 16))
    for name, value, _ in rows:
        print(f"{name:<{width}}  {value:.3e}")


if __name__ == "__main__":
    main()

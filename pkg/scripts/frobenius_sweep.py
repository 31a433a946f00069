"""Frobenius compatibility over every fixture curve, several N and both root choices."""

import argparse
import time
from dataclasses import dataclass, field

from skeintrace.scalar import choose_modulus
from skeintrace.surface import FIXTURES, fixture
from skeintrace.thread import verify_frobenius


@dataclass
class SweepConfig:
    orders: list = field(default_factory=lambda: [3, 5])  # N = 7 cables plane L1 seven times, about 30 s a check
    epsilons: list = field(default_factory=lambda: [-1, 1])


def run(cfg):
    failures = 0
    for name in FIXTURES:
        for curve in fixture(name).curves.values():
            for N in cfg.orders:
                for eps in cfg.epsilons:
                    ctx = choose_modulus(N, eps)
                    t = time.perf_counter()
                    rep = verify_frobenius(curve, N, ctx)
                    failures += not rep.ok
                    print(f"{'OK  ' if rep.ok else 'FAIL'} {name:22s} {curve.name:5s} N={N} M={ctx.modulus:3d} "
                          f"terms={len(rep.lhs):3d} {time.perf_counter() - t:.2f}s")
    return failures


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--orders", type=int, nargs="+", default=SweepConfig().orders)
    p.add_argument("--epsilons", type=int, nargs="+", default=SweepConfig().epsilons)
    failures = run(SweepConfig(**vars(p.parse_args())))
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()

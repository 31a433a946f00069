"""Monomial counts of the S_N- and T_N-threads of L0 as N grows.

The S_N count grows quadratically in N, the collapsed T_N count stays at 3.
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from skeintrace.scalar import choose_modulus
from skeintrace.surface import fixture
from skeintrace.thread import thread_S, thread_T_root


@dataclass
class GrowthConfig:
    fixture: str = "punctured_torus"
    curve: str = "L0"
    n_min: int = 2
    n_max: int = 12


def run(cfg):
    curve = fixture(cfg.fixture).curve(cfg.curve)
    rows = []
    for N in range(cfg.n_min, cfg.n_max + 1):
        t = time.perf_counter()
        s = thread_S(curve, N)
        row = {"N": N, "admissible": s.admissible, "s_terms": s.surviving,
               "seconds": round(time.perf_counter() - t, 4)}
        if N % 2 and N >= 3:
            row["t_terms"] = thread_T_root(curve, N, choose_modulus(N, -1)).surviving
        rows.append(row)
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    for name, value in asdict(GrowthConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    cfg = GrowthConfig(**vars(p.parse_args()))
    rows = run(cfg)
    for row in rows:
        print(json.dumps(row))
    counts = [r["s_terms"] for r in rows]
    second = [c - 2 * b + a for a, b, c in zip(counts, counts[1:], counts[2:])]
    print(f"second differences of S_N counts: {sorted(set(second))}")


if __name__ == "__main__":
    main()

"""Random membership sweep: reduce versus the linear-algebra oracle, with timing."""

import argparse
import random
import time
from dataclasses import dataclass

from gf2coh import membership as mb


@dataclass
class Config:
    n: int = 4
    max_degree: int = 16
    samples: int = 2000
    seed: int = 1


def main(cfg: Config) -> int:
    rng = random.Random(cfg.seed)
    members = disagreements = 0
    start = time.perf_counter()
    for _ in range(cfg.samples):
        x = mb.random_element(cfg.n, rng.randint(0, cfg.max_degree), rng)
        member = mb.is_member(x)
        members += member
        if member != mb.membership_oracle(x):
            disagreements += 1
            print(f"disagreement on {x}")
    elapsed = time.perf_counter() - start
    print(f"n={cfg.n} degree<={cfg.max_degree}: {cfg.samples} samples, {members} members, "
          f"{disagreements} disagreements, {elapsed:.2f}s")
    return 1 if disagreements else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for f in ("n", "max_degree", "samples", "seed"):
        ap.add_argument(f"--{f.replace('_', '-')}", type=int, default=getattr(Config, f))
    raise SystemExit(main(Config(**vars(ap.parse_args()))))

"""Print lim, lim^1 and the X_s dimension table degree by degree."""

import argparse
from dataclasses import dataclass

from gf2coh import quillen as ql


@dataclass
class Config:
    max_degree: int = 24


def main(cfg: Config) -> None:
    print(f"{'d':>3} {'F(E1)':>6} {'Hom':>4} {'rank':>5} {'lim':>4} {'lim1':>5} {'X_s':>4}")
    rows = ql.xs_borel_series(cfg.max_degree)
    for d, row in enumerate(rows):
        r = ql.lim_degree(d)
        print(f"{d:>3} {r.fe1_dim:>6} {r.hom_dim:>4} {r.phi_rank:>5} "
              f"{r.lim_dim:>4} {r.lim1_dim:>5} {row['dim']:>4}")
    for d in (3, 6):
        for u, v in ql.lim_degree(d).lim1_representatives:
            print(f"lim^1 representative in degree {d}: a -> {u}, b -> {v}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    main(Config(ap.parse_args().max_degree))

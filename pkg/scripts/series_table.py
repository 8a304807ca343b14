"""Expand the Poincare series used throughout and print them side by side."""

import argparse
from dataclasses import dataclass

from gf2coh import series as s


@dataclass
class Config:
    order: int = 30


def main(cfg: Config) -> None:
    named = {
        "chi0": s.chi0(),
        "chi1": s.chi1(),
        "chi2": s.chi2(),
        "lim1": s.lim1_series(),
        "A3-inv": s.chi_a3(),
        "S3-inv": s.chi_s3(),
    }
    for name, ser in named.items():
        print(f"{name:>7} = {ser}")
    cols = {k: v.expand(cfg.order) for k, v in named.items()}
    print("  d " + " ".join(f"{k:>7}" for k in cols))
    for d in range(cfg.order + 1):
        print(f"{d:>3} " + " ".join(f"{c[d]:>7}" for c in cols.values()))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=Config.order)
    main(Config(ap.parse_args().order))

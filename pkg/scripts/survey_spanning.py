"""How often do the relation trees fill out every spanning tree of the Taylor graph?

Samples CM ideals from random coprime labels and tallies the comparison
verdict, split by whether the ideal has a linear resolution. Only the
linear case has a known answer (always equal); the rest is data.
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from cmcodim2.sampling import random_cm_ideal
from cmcodim2.syzygy import has_linear_resolution, spanning_equals_relation


@dataclass
class Config:
    seed: int = 0
    count: int = 300
    max_vertices: int = 6
    n_vars: int = 8
    max_degree: int = 3


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    for _ in range(cfg.count):
        _, ideal = random_cm_ideal(rng, 2, cfg.max_vertices, cfg.n_vars, cfg.max_degree)
        linear = has_linear_resolution(ideal)
        equal = spanning_equals_relation(ideal).verdict
        tally[("linear" if linear else "nonlinear", "equal" if equal else "differs")] += 1
    return tally


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = Config(**vars(parser.parse_args()))
    tally = run(cfg)
    for (kind, verdict), n in sorted(tally.items()):
        print(f"{kind:10s} {verdict:8s} {n}")
    assert tally[("linear", "differs")] == 0, "a linear ideal with a missing spanning tree"


if __name__ == "__main__":
    main()

"""Fuzz the chordal realization: random block graphs, realized and checked end to end."""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from cmcodim2.chordal_construct import is_admissible_taylor_graph, realize, verify_realization
from cmcodim2.sampling import random_admissible_graph
from cmcodim2.syzygy import spanning_equals_relation, taylor_graph


@dataclass
class Config:
    seed: int = 0
    count: int = 200
    max_vertices: int = 8
    max_clique: int = 4


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    for _ in range(cfg.count):
        g = random_admissible_graph(rng, cfg.max_vertices, cfg.max_clique)
        r = realize(g)
        check = verify_realization(r)
        tally["realized"] += 1
        tally["verified"] += bool(check)
        tally["spanning = relation"] += spanning_equals_relation(r.ideal).verdict
        tally["Taylor graph admissible"] += is_admissible_taylor_graph(taylor_graph(r.ideal))[0]
        tally[f"vertices={g.vertex_count}"] += 1
    return tally


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = Config(**vars(parser.parse_args()))
    start = time.perf_counter()
    tally = run(cfg)
    for key in sorted(tally, key=lambda k: (k.startswith("vertices"), k)):
        print(f"{key:28s} {tally[key]}")
    print(f"elapsed {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()

"""Census of quaternionic size over random right-regular maps.

For each sample the size from the structure matrix M is compared with the
number of complex directions found by sphere sampling, and the rank and
biregularity verdicts are tabulated.
"""

import argparse
import json
from collections import Counter
from dataclasses import asdict, dataclass

import numpy as np

from qfueter.adjugate import is_rl_biregular
from qfueter.forms import size
from qfueter.linmap import random_basis, random_regular_map, rank
from qfueter.sphere import complex_direction_count


@dataclass
class CensusConfig:
    samples: int = 400
    seed: int = 1
    sphere_level: int = 3
    # fraction of samples drawn with one or more vanishing coefficients
    degenerate_fraction: float = 0.5


def run(cfg):
    rng = np.random.default_rng(cfg.seed)
    table = Counter()
    mismatches = 0
    for _ in range(cfg.samples):
        zero = ()
        if rng.random() < cfg.degenerate_fraction:
            zero = tuple(sorted(rng.choice([1, 2, 3], size=rng.integers(1, 4), replace=False).tolist()))
        L = random_regular_map(rng, random_basis(rng), zero)
        s = size(L)
        c = complex_direction_count(L, level=cfg.sphere_level)
        mismatches += c != 3 - s
        table[(s, rank(L), is_rl_biregular(L))] += 1
    rows = [{"size": s, "rank": r, "rl_biregular": b, "count": n} for (s, r, b), n in sorted(table.items())]
    return {"config": asdict(cfg), "rows": rows, "sphere_mismatches": mismatches}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    cfg = CensusConfig()
    for name, value in asdict(cfg).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    cfg = CensusConfig(**vars(ap.parse_args()))
    print(json.dumps(run(cfg), indent=2))


if __name__ == "__main__":
    main()

"""Scan the holomorphy criterion of a polynomial function across a plane of points.

Prints, for each point of a 2D grid in the (x0, x2) plane, the two criterion
values and the size of the differential.  With the default function the
criterion vanishes on the line x0 + x2 = 0 and size drops from 3 to 2 there.
"""

import argparse
import json
from dataclasses import asdict, dataclass

import numpy as np

from qfueter.fueter import classify_at, holomorphy_criterion
from qfueter.parser import parse_function
from qfueter.quaternion import Quaternion


@dataclass
class ScanConfig:
    source: str = "f1 = z1 + z2^2 + conj(z1); f2 = z1^2 + z2 + conj(z2)"
    half_width: float = 1.0
    steps: int = 9
    x1: float = 0.1
    x3: float = 0.2


def run(cfg):
    F = parse_function(cfg.source)
    axis = np.linspace(-cfg.half_width, cfg.half_width, cfg.steps)
    rows = []
    for x0 in axis:
        for x2 in axis:
            p = Quaternion(x0, cfg.x1, x2, cfg.x3)
            e1, e2 = holomorphy_criterion(F, p)
            rows.append({"x0": float(x0), "x2": float(x2), "abs_expr1": abs(e1), "abs_expr2": abs(e2),
                         "size": classify_at(F, p, checked=True).size})
    return {"config": asdict(cfg), "rows": rows}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    cfg = ScanConfig()
    for name, value in asdict(cfg).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(value), default=value)
    cfg = ScanConfig(**vars(ap.parse_args()))
    print(json.dumps(run(cfg), indent=2))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerate the bundled multiobjective QAP instances (data/mqap/mq*.dat).

The mq* files are deterministic stand-ins for the KC* benchmark suite of
Knowles and Corne, drawn from the two published instance classes:

  uni  distance and flow entries are i.i.d. uniform integers
  rl   locations are random points in a square (rounded Euclidean
       distances) and flows are log-uniform with a controlled amount of
       inter-objective correlation

They are NOT the original KC files, which are not redistributable here.
Drop authentic KC*.dat files into data/mqap/ and the benchmark harness
picks them up by name automatically (see data/README.md).

Running this script rewrites the mq* files byte-for-byte; it has no
dependencies beyond the Python standard library.
"""

import math
import random
from pathlib import Path

GRID = 100          # coordinate range and uniform entry bound
FLOW_EXPONENT = 4.0  # log-uniform flow spread for the real-like class


def uni_matrix(rng: random.Random, n: int) -> list[list[int]]:
    return [[0 if i == j else rng.randrange(GRID) for j in range(n)] for i in range(n)]


def euclid_matrix(rng: random.Random, n: int) -> list[list[int]]:
    pts = [(rng.uniform(0, GRID), rng.uniform(0, GRID)) for _ in range(n)]
    return [[round(math.dist(pts[i], pts[j])) for j in range(n)] for i in range(n)]


def rl_flows(rng: random.Random, n: int, m: int, corr: float) -> list[list[list[int]]]:
    # First flow matrix is the reference; later ones reuse its latent draws
    # blended with fresh noise so `corr` steers the inter-objective
    # correlation sign and strength.
    base = [[rng.random() for _ in range(n)] for _ in range(n)]
    flows = []
    for k in range(m):
        f = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if k == 0:
                    u = base[i][j]
                else:
                    w = rng.random()
                    if corr >= 0:
                        u = corr * base[i][j] + (1.0 - corr) * w
                    else:
                        u = -corr * (1.0 - base[i][j]) + (1.0 + corr) * w
                f[i][j] = int(10.0 ** (FLOW_EXPONENT * u)) - 1
        flows.append(f)
    return flows


def uni_flows(rng: random.Random, n: int, m: int) -> list[list[list[int]]]:
    return [uni_matrix(rng, n) for _ in range(m)]


# name, n, m, class, correlation (rl only), seed
INSTANCES = [
    ("mq10-2fl-1rl", 10, 2, "rl", 0.9, 101),
    ("mq10-2fl-2rl", 10, 2, "rl", 0.5, 102),
    ("mq10-2fl-3rl", 10, 2, "rl", 0.0, 103),
    ("mq10-2fl-4rl", 10, 2, "rl", -0.5, 104),
    ("mq10-2fl-5rl", 10, 2, "rl", -0.9, 105),
    ("mq10-2fl-1uni", 10, 2, "uni", None, 111),
    ("mq10-2fl-2uni", 10, 2, "uni", None, 112),
    ("mq10-2fl-3uni", 10, 2, "uni", None, 113),
    ("mq20-2fl-1rl", 20, 2, "rl", 0.9, 201),
    ("mq20-2fl-1uni", 20, 2, "uni", None, 211),
]


def write_instance(path: Path, name: str, n: int, m: int, cls: str,
                   corr, seed: int) -> None:
    rng = random.Random(seed)
    if cls == "rl":
        dist = euclid_matrix(rng, n)
        flows = rl_flows(rng, n, m, corr)
        detail = f"class=rl corr={corr}"
    else:
        dist = uni_matrix(rng, n)
        flows = uni_flows(rng, n, m)
        detail = "class=uni"
    lines = [f"# {name}: stand-in multiobjective QAP instance "
             f"({detail} n={n} m={m} seed={seed})"]
    lines.append(f"{n} {m}")
    for mat in [dist] + flows:
        lines.append("")
        lines.extend(" ".join(str(v) for v in row) for row in mat)
    path.write_text("\n".join(lines) + "\n", encoding="ascii")


def main() -> None:
    out_dir = Path(__file__).resolve().parent / "mqap"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, n, m, cls, corr, seed in INSTANCES:
        write_instance(out_dir / f"{name}.dat", name, n, m, cls, corr, seed)
        print(f"wrote {name}.dat")


if __name__ == "__main__":
    main()

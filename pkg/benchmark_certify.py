"""Compute a benchmark of duality certification on generated inputs."""

# python benchmark_certify.py -h

import argparse
import time

from dualcat import FiniteCategory, certify_generic, certify_simplicial, generate

# pylint: disable=invalid-name

parser = argparse.ArgumentParser(
    description="Benchmark of the certification of generated categories and "
    "complexes. Output the verdict, the degree and the average time in seconds."
)
parser.add_argument("runs", metavar="#", type=int, help="number of runs")
parser.add_argument(
    "specs", metavar="SPEC", nargs="+", help="generator such as gen:torus7"
)
args = parser.parse_args()

for spec in args.specs:
    total = 0.0
    certificate = None
    for run in range(args.runs):
        value = generate(spec)
        start = time.time()
        if isinstance(value, FiniteCategory):
            certificate = certify_generic(value)
        else:
            certificate = certify_simplicial(value)
        end = time.time()
        total += end - start
    if certificate is not None:
        print(
            f"{spec},"
            f"{certificate.verdict.value},"
            f"{certificate.degree},"
            f"{total / args.runs}"
        )

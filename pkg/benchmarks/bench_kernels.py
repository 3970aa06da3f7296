"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--pmax 2000] [--repeat 5]
"""

import argparse
import random
import timeit

from aperylike import _pykernels, kernels
from aperylike.modular import primes_between


def workloads(pmax: int, seed: int = 1):
    rng = random.Random(seed)
    primes = primes_between(100, pmax)[-20:]
    sums = []
    for p in primes:
        m = p**4
        sums.append(([rng.randrange(m) for _ in range(p)], rng.randrange(1, m), m))
    recs = [(True, 16, 8, 256, p - 1, p**3) for p in primes]
    chars = [(rng.randrange(p), rng.randrange(p), p) for p in primes]
    return {"power_sum": sums, "recurrence_residues": recs, "cubic_char_sum": chars}


def time_backend(name: str, jobs, repeat: int) -> float:
    kernels.use_backend(name)
    fn = getattr(kernels, jobs[0])

    def body():
        for args in jobs[1]:
            fn(*args)

    return min(timeit.repeat(body, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pmax", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend is timed")
    loads = workloads(args.pmax)
    for name, jobs in loads.items():
        for args_ in jobs:
            expected = getattr(_pykernels, name)(*args_)
            for b in backends:
                kernels.use_backend(b)
                assert getattr(kernels, name)(*args_) == expected, (name, b)
    print(f"{'kernel':<22}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, jobs in loads.items():
        times = [time_backend(b, (name, jobs), args.repeat) for b in backends]
        row = f"{name:<22}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()

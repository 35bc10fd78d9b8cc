"""Time the pure-Python and compiled reduction kernels against each other.

    python3 benchmarks/bench_kernels.py --repeat 5 --random 20
"""
import argparse
import random
import timeit
from fractions import Fraction
from unittest import mock

from fibercalc import fixtures
from fibercalc.groebner import _pykernel, buchberger
from fibercalc.groebner.ideal_file import parse_ideal_text
from fibercalc.groebner.polynomial import GREVLEX, Polynomial

try:
    from fibercalc.groebner import _ckernel
except ImportError:
    _ckernel = None


def random_ideal(rng, nvars=4, ngens=4, deg=3, nterms=4):
    vars = tuple(f"x{i}" for i in range(nvars))
    gens = []
    for _ in range(ngens):
        terms = {}
        for _ in range(nterms):
            e = [0] * nvars
            for _ in range(rng.randint(1, deg)):
                e[rng.randrange(nvars)] += 1
            terms[tuple(e)] = Fraction(rng.randint(-5, 5) or 1)
        gens.append(Polynomial(vars, terms))
    return gens


def with_kernel(kernel, fn):
    with mock.patch.object(buchberger, "_kernel", kernel):
        return fn()


def time_it(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--random", type=int, default=10, help="number of random ideals")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    kernels = [("python", _pykernel)]
    if _ckernel is not None:
        kernels.append(("cython", _ckernel))
    else:
        print("compiled kernel not built; timing the Python kernel only")

    workloads = []
    for name in ("IS-corrected", "IS-printed", "two-lines"):
        f = parse_ideal_text(fixtures.ideal_text(name), name)
        workloads.append((name, f.basis.generators))
    rng = random.Random(args.seed)
    workloads.append((f"random x{args.random}",
                      [random_ideal(rng) for _ in range(args.random)]))

    print(f"{'workload':<16}" + "".join(f"{k:>12}" for k, _ in kernels) + "     speedup")
    for name, gens in workloads:
        batches = gens if isinstance(gens[0], list) else [gens]

        def job(kernel):
            def run():
                for g in batches:
                    buchberger.groebner_basis(g, GREVLEX)
            return lambda: with_kernel(kernel, run)

        times = [time_it(job(k), args.repeat) for _, k in kernels]
        row = f"{name:<16}" + "".join(f"{t * 1000:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:>9.2f}x"
        print(row)

    # raw normal form on a reduced basis, many reductions
    f = parse_ideal_text(fixtures.ideal_text("IS-corrected"), "IS-corrected")
    gb = buchberger.groebner_basis(f.basis.generators, GREVLEX)
    G = [g.terms for g in gb.generators]
    L = [max(g, key=GREVLEX.key) for g in G]
    targets = [p.terms for p in random_ideal(random.Random(args.seed), nvars=len(gb.vars),
                                             ngens=200, deg=6, nterms=8)]
    times = []
    for _, k in kernels:
        times.append(time_it(lambda: [k.normal_form(t, G, L, GREVLEX.key) for t in targets],
                             args.repeat))
    row = f"{'normal_form':<16}" + "".join(f"{t * 1000:>10.1f}ms" for t in times)
    if len(times) == 2:
        row += f"  {times[0] / times[1]:>9.2f}x"
    print(row)


if __name__ == "__main__":
    main()

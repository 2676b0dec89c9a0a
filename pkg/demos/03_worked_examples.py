"""The three worked sl2-hat examples, rebuilt from explicit matrices.

Example 2 reports a rank mismatch with its expected values: the computed
12x12 intertwiner has rank 9 at z = 1 (see the info lines).
"""

from qcyclic.worked import example_suite

for n in (1, 2, 3):
    rep = example_suite(n)
    print(f"Example {n} ({rep['seconds']}s): {'all checks pass' if rep['pass'] else 'some checks differ'}")
    for c in rep["checks"]:
        mark = " " if c["pass"] else "!"
        print(f"  {mark} {c['name']:<36} got {c['got']!s:<6} expected {c['expected']}")
    for k, v in rep.get("info", {}).items():
        print(f"    info: {k} = {v}")
    print()

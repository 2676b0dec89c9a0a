"""Exhaustive desk-scale check: pairwise cyclicity implies cyclicity of triples."""

import time

from qcyclic.desk import Desk, criterion_sweep, triples_sweep, upper_parts_sweep, four_factor_sweep

t = time.time()
desk = Desk()
print(f"{len(desk.monos)} simple modules supported on l in (0, 2, 4), exponents <= 2")

r = triples_sweep(desk)
print(f"{r['triples']} ordered triples of total dim <= 64; {r['all_pairs_cyclic']} have all pairs cyclic;"
      f" {len(r['counterexamples'])} of those fail to be cyclic")

r = criterion_sweep(desk)
print(f"symbolic criterion certifies {r['claimed']} of {r['pairs']} pairs; refuted by the oracle: {len(r['counterexamples'])}")

r = upper_parts_sweep(desk)
print(f"upper parts of {r['cyclic_pairs']} cyclic pairs: {len(r['counterexamples'])} non-cyclic")

r = four_factor_sweep(desk)
print(f"S1+ (x) S2 (x) S3 (x) S1- for {r['all_pairs_cyclic']} triples: {len(r['counterexamples'])} non-cyclic")
print(f"done in {time.time() - t:.1f}s")

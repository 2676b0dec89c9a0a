"""Cyclicity of V(q^a) (x) V(q^b) depends on the order of the factors."""

from qcyclic import eval_module, fundamental_order_ok, is_cyclic, sp, tensor
from qcyclic.sl2 import calibration_table, cyclic_span

for a, b in ((2, 0), (0, 2), (0, 4), (4, 0)):
    t = tensor(eval_module(a), eval_module(b))
    # position 1 of a fundamental list is the rightmost factor
    predicted = fundamental_order_ok([(1, sp(b)), (1, sp(a))])
    print(f"V(q^{a}) (x) V(q^{b}): hw spans {cyclic_span(t)} of {t.dim}, cyclic={is_cyclic(t)}, ordering test={predicted}")

print("The ordering test is sufficient only: V(1) (x) V(q^4) is cyclic (in fact simple) anyway.")
print("\nThe evaluation-module convention was fixed by this asymmetry.")
print("(orientation, shift) -> (V(q^2)(x)V(1) cyclic, V(1)(x)V(q^2) cyclic):")
for key, val in sorted(calibration_table().items()):
    print("   ", key, val)

"""q-characters: from sl2-hat strings to fundamental modules of higher rank."""

from qcyclic import cartan, fm_fundamental, parse_monomial, sl2_simple_qchar, sp
from qcyclic.qchar import string_decompose

print("The sl2-hat fundamental module has two l-weights:")
print("   ", sl2_simple_qchar(parse_monomial("Y[1;0]")))

M = parse_monomial("Y[1;0]*Y[1;2]*Y[1;4]^2")
print(f"\n{M} splits into strings {[(a.l, k) for a, k in string_decompose(M)]}")
chi = sl2_simple_qchar(M)
print(f"so its simple module has dimension {chi.dimension()}:")
print("   ", chi)

print("\nFundamental modules of higher rank, by completion from the top monomial:")
for label in ("A2~1", "C2~1", "G2~1", "D4~1"):
    cd = cartan(label)
    dims = [fm_fundamental(cd, i, sp(0)).dimension() for i in cd.nodes]
    print(f"    {label:5s} dims {dims}")
print("\nIn A2 the first fundamental character is")
print("   ", fm_fundamental(cartan("A2~1"), 1, sp(0)))

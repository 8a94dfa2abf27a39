"""Bruhat order of W(B2), the poset of torus-stable primes and the witnesses
for each drawn inclusion."""

from uqplus import weylspec as ws

for x in ws.weyl_b2():
    print(f"{x.name:9s} {x.describe_action()}")
print()
print(ws.bruhat_poset().to_dot())
p, m = ws.hspec_poset()
print(p.to_dot())
print("order reversing:", ws.is_order_reversing())
for lo, hi, g, text in ws.containment_witnesses().checked:
    print(f"{lo} in {hi}: {g} = {text}")

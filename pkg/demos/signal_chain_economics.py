#!/usr/bin/env python3
"""Cost arithmetic for pushing a signal down a line of neurons.

Distance eats signal, so a feeder must overshoot by distance x loss-rate.
When one impulse is too weak, the receiving neuron behaves like a
capacitor: it stores charge across several feeder firings and fires once
its threshold is reached. Chained together, the per-hop firing counts
multiply, and that product is what makes placement matter: activating a
region from the multiplicative middle is far cheaper than from the
cluster-densest point.
"""

from nestfire import (
    HopSpec,
    WeightChain,
    best_center,
    centering_cost,
    chain_source_firings,
    event_oracle,
    firings_per_hop,
    hops_from_weights,
    required_output,
)

print("= One hop: overshoot and capacitor behaviour =\n")
hop = HopSpec(distance=4.0, attenuation=0.25, threshold=1.0, impulse=1.5)
print(f"hop: distance {hop.distance}, loss {hop.attenuation}/unit,"
      f" threshold {hop.threshold}, impulse {hop.impulse}")
print(f"to deliver 1.0 downstream the feeder must emit {required_output(hop, 1.0)}"
      " (the demand plus distance x loss)")
print(f"a single {hop.impulse} impulse arrives at only {hop.arriving}, so the"
      f" target stores charge and fires after {firings_per_hop(hop)} feeder firings")

print("\n= Chains multiply =\n")
for weights in [(2, 2), (2, 3), (3, 2, 2)]:
    chain = WeightChain(weights)
    product = chain_source_firings(chain)
    replay = event_oracle(hops_from_weights(chain))
    print(f"per-hop needs {list(weights)}: product rule {product},"
          f" event replay {replay}")
print("\nIf neuron 1 fires twice to trigger neuron 2 and neuron 2 fires twice")
print("to trigger neuron 3, neuron 1 fires 2 x 2 = 4 times in total. The")
print("event replay reaches the same counts by simulating every stored charge.")

print("\n= Where to excite a region from =\n")
line = WeightChain((5, 2, 2, 2, 10, 10))
print("a line of 7 neurons, per-hop firing requirements", list(line.weights))
print()
print("position  left*right cost")
for pos in range(line.num_positions):
    cost = centering_cost(line, pos)
    marker = "  <- cheapest" if pos == best_center(line) else ""
    print(f"      N{pos + 1}  {cost:>6}{marker}")

print("""
N3 sits in the dense local cluster, but spanning the whole region from
there costs 410 extra firings against 140 from N5: the two long hops are
prohibitive for any activation point that faces them together. Centering
by cumulative multiplication therefore spreads activity evenly over the
region instead of piling it into the densest spot, and new growth around
the centre leaves the original concept intact.""")

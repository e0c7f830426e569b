"""A replayable vanishing certificate on the cubic surface.

The cubic surface is P^2 blown up in six general points. Its anticanonical
class is ample, so H^1(-K) = 0 follows from Kodaira vanishing. The prover
records every numerical check it relied on, and `replay` re-runs those
checks from the JSON alone.
"""
import json

from divcalc import make_del_pezzo_blowup, prove_h1_vanishing, replay

dp6 = make_del_pezzo_blowup(6)
print(f"{dp6.name}: {len(dp6.curves)} curves of self-intersection -1")

d = -dp6.canonical
cert = prove_h1_vanishing(d, dp6)
data = cert.to_json()
print(f"conclusion: {cert.conclusion}; first rule {cert.rules[0].id}; alternates {list(cert.alternates)}")
for check in data["rules"][0]["checks"]:
    print(f"  {check['name']}: {check['verdict']} {check['detail']}")
print("replay:", replay(data, dp6))

# pointing the recorded nef check at E1 makes replay fail
data["rules"][0]["checks"][1]["inputs"]["D"] = ["0", "1"] + ["0"] * (dp6.rank - 2)
print("replay after tampering:", replay(data, dp6))

# a class the prover cannot handle gets an explanation per rule
cert = prove_h1_vanishing(dp6.divisor([0, 1, 0, 0, 0, 0, 0]), dp6)
print(f"\nE1: {cert.conclusion}")
for reason in cert.caveats:
    print("  ", reason)

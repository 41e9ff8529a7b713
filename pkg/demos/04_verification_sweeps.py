"""
Bounded verification sweeps
===========================

Each claim is checked against a raw search that uses none of the shortcuts being
tested. The misprinted formulas are kept around to show the sweeps can fail.
"""

# %%
from pythrecip.oracles import CLAIMS, run_claim, verify_euclid_lemma, verify_theorem

# %%
for claim in CLAIMS:
    rep = run_claim(claim, 10 if claim == "T1" else 40)
    print(f"{claim:6s} cases={rep.cases_checked:7d} counterexamples={rep.counterexample_count}")

# %%
# Negative controls.
print(verify_euclid_lemma(10, require_coprime=False).counterexamples[:3])
print(verify_theorem("T4", 12, printed=True).counterexamples[:3])
print(verify_theorem("T2iv", 12, printed=True).counterexamples[:3])
print(verify_theorem("T5", 5, printed=True).counterexamples[:3])

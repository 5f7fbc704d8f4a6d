"""
Internal inconsistencies, checked mechanically
==============================================

A few printed intermediate expressions disagree with the final formulas. The
oracle settles each one.
"""

# %%
from harmonic_families.harmonic import harmonic_number, normalized_vector
from harmonic_families import Path, generate
from harmonic_families.verify import errata_report

for record in errata_report():
    print(f"{record.key}: {'confirmed' if record.confirmed else 'NOT confirmed'}")
    print("   ", record.detail)

# %%
# Endpoint of P_5 directly: ``H_4 / 4`` matches, ``H_5 / 4`` does not.
print(normalized_vector(generate(Path(5)).graph)[0], harmonic_number(4) / 4, harmonic_number(5) / 4)

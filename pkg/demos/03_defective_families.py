"""
Known defective cases and their split certificates
==================================================

When the expected secant fills the ambient space, a splitting a = b + c with
forms f1 of degree b and f2 of degree c through all s points gives f1 * f2,
a form singular at every point.  That is one condition fewer than expected,
so the secant is defective.
"""

from svsecant import RunConfig, secant_dimension
from svsecant.secant import ANOMALOUS_EXAMPLE, smallest_defective_examples, validate_certificate

cfg = RunConfig(seed=19)

for ex in smallest_defective_examples():
    rep = secant_dimension(ex.spec, ex.s, cfg)
    line = f"{ex.family:<24} {str(ex.params):<18} s={ex.s:<3} dim={rep.dim_actual:<3} expected={rep.dim_expected}"
    if rep.certificate is not None:
        ok = validate_certificate(ex.spec, ex.s, rep.certificate, cfg).ok
        line += f"  split {rep.certificate.b}+{rep.certificate.c} checked={ok}"
    print(line)

# %%
# (P1)^4 in multidegree (1,1,1,1) is defective at s = 3 without any splitting.
rep = secant_dimension(ANOMALOUS_EXAMPLE.spec, 3, cfg)
print(rep.dim_actual, "vs", rep.dim_expected, "certificate:", rep.certificate)

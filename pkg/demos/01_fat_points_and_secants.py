"""
Secant dimensions from double points
====================================

The s-th secant variety of a Segre-Veronese variety has dimension one less
than the number of conditions that s generic double points impose on forms
of the embedding multidegree.  Here we build that condition matrix by hand,
rank it over F_p, and compare with the library's report.
"""

from svsecant import RunConfig, VarietySpec, secant_dimension
from svsecant.fatpoints import conditions_matrix, sample_scheme
from svsecant.modlinalg import rank

cfg = RunConfig(seed=7)

# P1 x P1 in bidegree (2, 2): 9 monomials, so the ambient space is P8.
spec = VarietySpec.of((1, 1), (2, 2))
print(spec, "N =", spec.N)

# Each double point contributes one row per first partial in the 2 + 2
# homogeneous coordinates.  Euler's relation in each factor makes only
# n + 1 = 3 of those 4 rows independent.
scheme = sample_scheme(spec.shape, 3, 2, seed=11, field=cfg.field)
m = conditions_matrix(scheme, spec.degree, field=cfg.field)
print("condition matrix:", m.rows, "x", m.cols, "rank", rank(m))

# Eight conditions, so the 3-secant has dimension 7 instead of the expected 8.
rep = secant_dimension(spec, 3, cfg)
print(f"dim = {rep.dim_actual}, expected = {rep.dim_expected}, defect = {rep.defect}")

# The defect comes with a witness: a (1, 1) form through the 3 points, whose
# square is singular at all of them.
print("certificate:", rep.certificate)

# %%
# Scanning s shows where the defect lives.
for s in range(1, 5):
    r = secant_dimension(spec, s, cfg, certify=False)
    print(s, r.dim_actual, r.dim_expected)

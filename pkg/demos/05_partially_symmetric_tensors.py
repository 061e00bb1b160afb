"""
Points as partially symmetric tensors
=====================================

A point of the Segre-Veronese variety is a tensor v_1^{(x) a_1} (x) ... that
is symmetric inside each block of indices.  Its flattenings all have rank 1,
and sums of s such tensors have flattening rank at most s.  The tangent
directions at s points span a space of dimension dim V^s + 1.
"""

from svsecant import RunConfig, VarietySpec, embed_point, flattening_rank, is_partially_symmetric
from svsecant.fatpoints import sample_scheme
from svsecant.modlinalg import trial_rng
from svsecant.secant import secant_dimension
from svsecant.tensor import tangent_span_rank

cfg = RunConfig(seed=29, trials=1)
spec = VarietySpec.of((1, 1), (2, 2))
pts = sample_scheme(spec.shape, 3, 2, trial_rng(cfg.seed, 0), cfg.field).points

coords, T = embed_point(pts[0], spec, cfg.field)
print("tensor shape", T.entries.shape, "symmetric:", is_partially_symmetric(T))
print("coordinates", coords)

total = embed_point(pts[0], spec, cfg.field)[1] + embed_point(pts[1], spec, cfg.field)[1]
print("flattening ranks of a 2-term sum:", [flattening_rank(total, range(k)) for k in (1, 2, 3)])

# %%
rep = secant_dimension(spec, 3, cfg, certify=False)
print("tangent span", tangent_span_rank(pts, spec, cfg.field), "= dim + 1 =", rep.dim_actual + 1)

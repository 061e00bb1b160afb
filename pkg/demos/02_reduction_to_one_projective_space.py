"""
The same rank in a single projective space
==========================================

Dehomogenizing each factor maps P^{n_1} x ... x P^{n_t} into P^n.  Forms of
the right shape on P^n (the "claim basis") match multigraded monomials one
for one, and the projected double points impose the same number of
conditions.  The library uses both routes on the same points and refuses to
answer when they disagree.
"""

from svsecant import RunConfig, claim_basis, project_point
from svsecant.fatpoints import sample_scheme
from svsecant.reduction import compare_methods

cfg = RunConfig(seed=3)

basis = claim_basis((1, 1), (1, 1))
for mono, src in zip(basis.monomials, basis.source_degrees):
    print("z-exponents", mono, "from factor degrees", src)

scheme = sample_scheme((2, 1), 4, 2, seed=5, field=cfg.field)
print("first point", scheme.points[0].blocks, "->", project_point(scheme.points[0]).coords)

# %%
for shape, degree in [((2, 1), (1, 2)), ((1, 1, 1), (2, 1, 1)), ((3, 2), (2, 2))]:
    pts = sample_scheme(shape, 4, 2, seed=5, field=cfg.field).points
    chk = compare_methods(shape, degree, pts, 2, cfg.field)
    print(shape, degree, "direct", chk.direct_rank, "reduced", chk.reduced_rank, "agree", chk.agree)

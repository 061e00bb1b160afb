"""
Grassmann secants through a product
===================================

The variety of k-planes inside spans of s points of X is defective exactly
when the s-secant of X x P^k is, by the same amount.  So one more factor of
degree 1 turns a Grassmann question into an ordinary secant computation.
"""

from svsecant import RunConfig, grassmann_secant_dimension

cfg = RunConfig(seed=23)

for alpha in (1, 2, 3):
    g = grassmann_secant_dimension(((1, 1), (2 * alpha, 1)), 1, 2 * alpha + 1, cfg)
    print(f"P1xP1 ({2 * alpha},1), lines in {2 * alpha + 1}-secant spans: "
          f"dim {g.dim_actual} vs expected {g.dim_expected} via {g.product_spec}")

# %%
# The cubic Veronese surface has no such defect for planes.
for s in range(3, 8):
    g = grassmann_secant_dimension(((2,), (3,)), 2, s, cfg)
    print(s, g.dim_actual, g.dim_expected, g.defect)

"""
Exact transfer decisions from cyclotomic arithmetic
===================================================

Eigenvalues of the chain Laplacian are algebraic integers in a cyclotomic
field. Integer relations among them decide whether transfer between the ends
gets arbitrarily close to perfect.
"""

from pgst import cyclotomic_poly, decide_pgst_laplacian, exact_path_laplacian_eigenvalues
from pgst.exact import blocking_witness, is_relation, relation_divides

# the field for n = 6 is generated by a primitive 12th root of unity
print("Phi_12(x) =", cyclotomic_poly(12))

eigs = exact_path_laplacian_eigenvalues(6)
for r, e in enumerate(eigs, start=1):
    print(f"lambda_{r} = {e.embed().real:.12f}")

# verdicts for the end vertices
for n in range(2, 17):
    d = decide_pgst_laplacian(n)
    extra = f" blocked by {list(d.witness)}" if d.witness is not None else ""
    print(f"n={n:2d} verdict={d.verdict}{extra}")

# an explicit blocking relation, checked two independent ways
w = blocking_witness(12)
print(w.kind, "m =", w.m, "k =", w.k, "relation", list(w.ell))
print("sum l_r lambda_r == 0:", is_relation(w.ell, exact_path_laplacian_eigenvalues(12)))
print("Phi_24 divides L(x):", relation_divides(w.ell, 12))
print("odd-index sum:", w.parity_sum)

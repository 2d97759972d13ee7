"""
Cyclic duality on paracyclic morphisms
======================================

Morphisms n -> m are monotone maps of the integers with
f(j + n + 1) = f(j) + m + 1, stored by their values on 0..n.
"""

from cyclicdual.para_cat import (ParaMorphism, compose, contravariance_sweep, cycle,
                                 cyclic_dual, degeneracy, face, in_Delta, in_K,
                                 lambda_canonical, power)

# the cyclic operator on [2] shifts every value by one
t2 = cycle(2)
print("t_2             =", t2)
print("t_2 o t_2       =", compose(t2, t2))
print("dual of t_2     =", cyclic_dual(t2))

# faces and degeneracies trade places under the dual
d1 = face(2, 1)
print("d_1             =", d1, "  dual:", cyclic_dual(d1), "= s_1:", degeneracy(1, 1))

# the dual keeps K but not Delta: this map lies in Delta, its dual only in K
f = ParaMorphism(0, 1, (1,))
g = cyclic_dual(f)
print(f"{f}  in Delta: {in_Delta(f)}   dual {g}  in K: {in_K(g)}  in Delta: {in_Delta(g)}")

# t_n^(n+1) is a full turn; it becomes the identity in the cyclic quotient
for n in range(4):
    turn = power(cycle(n), n + 1)
    print(f"n={n}: t^(n+1) = {turn}  ->  {lambda_canonical(turn)}")

# exhaustive contravariance check, vectorized over all composable pairs
out = contravariance_sweep(max_rank=3, window=2)
print(f"(g o f)° = f° o g° on {out['pairs']} pairs, failures: {out['failure_count']}")

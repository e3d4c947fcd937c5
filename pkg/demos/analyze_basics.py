"""
Analyzing one Boolean function
==============================

Parse a polynomial, scan it for degree-drop subspaces, and read off the
stability order and the invariants that explain the counts.
"""

from degstab import ANF, deg_stab, profile
from degstab.degreedrop import (
    check_dd_fast_duality,
    dd_hyperplane_normal_space,
    enumerate_degree_drop,
    fast_points,
)
from degstab.invariants import r_values

# digit notation: "123" is the monomial x1*x2*x3
f = ANF.parse("123+456", 8)
print("f =", f.to_text(), "on", f.n, "variables, degree", f.degree())

# where does the degree survive?  codim 1 is clean, codim 2 is not
prof = profile(f, k_max=3)
for row in prof.rows:
    print(f"co-dimension {row.codim}: {row.count} degree-drop spaces"
          f" ({row.new} not inherited from above)")
print("deg_stab(f) =", deg_stab(f))

# the first few degree-drop spaces of co-dimension 2, as equations
some = list(enumerate_degree_drop(f, 2))[:4]
for space in some:
    print("drops on:", " and ".join(
        "+".join(f"x{i+1}" for i in range(f.n) if a >> i & 1) + "=0"
        for a in space.forms
    ))

# no hyperplane drop means the normal space is trivial, and the kernel
# dimensions R_k say the same thing numerically: 2^R_1 - 1 hyperplanes
normals = dd_hyperplane_normal_space(f)
print("hyperplane normal space dimension:", normals.dim)
print("R_1, R_2, R_3 =", r_values(f, 3))

# hyperplane drops of f correspond to fast points of the complement
comp = f.complement()
print("complement degree:", comp.degree(),
      "fast points:", fast_points(comp).count)
print("duality verified:", check_dd_fast_duality(f, k_max=1).ok)

# a function that does drop on hyperplanes, for contrast
g = ANF.parse("1234", 8)
print("\ng =", g.to_text())
print("hyperplanes:", sum(1 for _ in enumerate_degree_drop(g, 1)),
      "= 2^R_1 - 1 with R_1 =", r_values(g, 1)[0])

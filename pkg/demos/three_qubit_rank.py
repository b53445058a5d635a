"""How many independent invariants does a symmetric three-qubit state have?

The family r e^{i phi}|3,0> + p|2,1> + q|0,3> has four real parameters.  The
numerical Jacobian of the invariant map has full rank when moments up to
k=5 are used; single-photon blocks alone give at most two independent
functions.
"""

from photon_invariants import jacobian_rank

for label, kwargs in [("moments k<=5 and blocks k<=2", {}),
                      ("moments k<=5", {"kmax_blocks": -1}),
                      ("blocks k<=3", {"kmax_moments": 0, "kmax_blocks": 3}),
                      ("blocks k<=2", {"kmax_moments": 0, "kmax_blocks": 2}),
                      ("blocks k<=1", {"kmax_moments": 0, "kmax_blocks": 1})]:
    res = jacobian_rank(**kwargs)
    print(f"{label:30s} rank {res.rank}  singular values {res.singular_values.round(8)}")

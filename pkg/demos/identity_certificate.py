# An identity certificate
#
# A polynomial identity of total degree D holds everywhere once it holds on
# a triangular grid that contains a simplex of side D.  verify_identity
# widens the grid when the degree needs it and says whether the pass is a
# certificate.

from borosmoll import identities

checks = {c.name: c for c in identities.standard_identities()}
rep = identities.verify_identity(checks["Delta1"], m_max=40)
print(rep.passed, rep.checked, rep.witness)

# The same identity after clearing denominators, compared as polynomials.

lhs, rhs = identities.cleared_forms()["Delta1"]
print(lhs == rhs, lhs.total_degree)

# Sign claims are finite evidence on a sampled region; the witness is the
# point closest to zero.

claim = next(c for c in identities.standard_sign_claims() if c.name == "Delta1>0")
rep = identities.verify_sign_claim(claim, range(126, 140))
print(rep.passed, rep.checked, rep.witness)

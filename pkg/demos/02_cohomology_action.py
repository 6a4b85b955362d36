"""The induced action on cohomology as exact compound matrices.

Degree l of the action is the l-th compound of M^-1: an integer matrix whose
eigenvalues are the l-fold products of eigenvalues of M^-1. The brute-force
product enumeration is an independent oracle for the compound spectra, and
two classical identities (Lefschetz alternating trace, Poincare duality of
spectra) hold exactly / to float precision.
"""

from toralmix import (
    eigen_match_distance,
    induced_action,
    lefschetz_number,
    lefschetz_reference,
    spectrum_products_oracle,
    validate_automorphism,
)

plastic = validate_automorphism([[0, 0, 1], [1, 0, 1], [0, 1, 0]])
inv_eigs = [1 / z for z in plastic.eigenvalues]

print("plastic companion: cohomology action per degree")
for l in range(plastic.dim + 1):
    act = induced_action(plastic, l)
    print(f"  l={l}: dim={act.dim}")
    for row in act.matrix:
        print("       ", [int(x) for x in row])
    print("        spectrum moduli:", [round(abs(z), 7) for z in act.spectrum])
    oracle = spectrum_products_oracle(inv_eigs, l)
    print(f"        oracle matching distance: {eigen_match_distance(act.spectrum, oracle):.2e}")

print()
print("Lefschetz alternating trace (exact rational):",
      lefschetz_number(plastic), "= det(I - M^-1) =", lefschetz_reference(plastic))

# Jordan structure: a block-diagonal pair of cat maps makes sigma_2 contain
# the eigenvalue 1 with multiplicity 4 (four trivial blocks)
cat_sum = validate_automorphism([[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]])
act2 = induced_action(cat_sum, 2)
print()
print("two cat blocks, degree 2 spectrum moduli:",
      sorted(round(abs(z), 6) for z in act2.spectrum))
print("jordan blocks:", [(round(z.real, 6), n) for z, n in act2.jordan_blocks])

"""Truncated pushforward on Fourier modes, and a small Ulam experiment.

On the retained modes the pushforward of a linear automorphism is a 0/1
column map: iterate any nonzero mode and it escapes the cutoff, so the
truncation is nilpotent away from the constants and its spectrum above any
positive floor is exactly {1}. The Ulam matrix of the same map is a genuine
stochastic approximation with leading eigenvalue 1.
"""

from toralmix import (
    linear_torus_map,
    mode_cycles,
    perturbed_cat_map,
    pushforward_matrix,
    stochastic_spectrum,
    truncated_spectrum,
    ulam_discretize,
    validate_automorphism,
)

cat = validate_automorphism([[2, 1], [1, 1]])
op = pushforward_matrix(cat, cutoff=16)
print(f"cat map, K=16: dim={op.dim}, escaped columns={op.escaped_modes}, "
      f"nilpotency index={op.nilpotency_index}")
print(f"  spectrum above 1e-10: {op.spectrum}")
full = truncated_spectrum(op, floor=0.0)
print(f"  with floor=0: {len(full)} eigenvalues, "
      f"{sum(1 for z in full if abs(z) < 1e-10)} of them numerically zero")
print(f"  cycles among nonzero modes: {mode_cycles(op)} (acyclic, as proved)")

plastic = validate_automorphism([[0, 0, 1], [1, 0, 1], [0, 1, 0]])
op3 = pushforward_matrix(plastic, cutoff=6)
print(f"plastic, K=6: dim={op3.dim}, nilpotency index={op3.nilpotency_index}, "
      f"spectrum={op3.spectrum}")
print()

# Ulam: cell-transition stochastic matrix; exploratory for perturbed maps
p = ulam_discretize(linear_torus_map(cat.matrix), n_cells=32, samples_per_cell=100, seed=7)
eigs = stochastic_spectrum(p, k=5)
print("Ulam, cat map, N=32, 100 samples/cell, seed 7:")
print("  leading eigenvalues:", [round(abs(z), 6) for z in eigs])

p_eps = ulam_discretize(perturbed_cat_map(cat.matrix, 0.01), n_cells=32,
                        samples_per_cell=100, seed=7)
eigs_eps = stochastic_spectrum(p_eps, k=5)
print("same with the eps=0.01 sin-perturbation (exploratory, no resonance claim):")
print("  leading eigenvalues:", [round(abs(z), 6) for z in eigs_eps])

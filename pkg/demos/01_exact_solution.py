"""Walk through the closed-form ground state of the coupled pair.

Two particles share a harmonic trap of frequency omega0 and repel
through a quadratic coupling of strength lambda < 0.5.  Rotating to
center-of-mass and relative coordinates decouples the problem into two
oscillators, and everything downstream (density, energy, occupation
spectrum) is closed-form in their frequencies.
"""

from harmonium import (
    ModelParams,
    density,
    derive_frequencies,
    effective_potential,
    exact_energy,
    hartree_fock,
)

params = ModelParams(omega0=1.0, coupling=0.3)
f = derive_frequencies(params)

print("model: omega0 = %g, coupling = %g" % (params.omega0, params.coupling))
print()
print("decoupled mode frequencies")
print(f"  center of mass  omega1 = {f.omega1:.12f}")
print(f"  relative        omega2 = {f.omega2:.12f}  (softens toward 0 as coupling -> 0.5)")
print(f"  harmonic mean   omega_s = {f.omega_s:.12f}  (sets the density width)")
print(f"  geometric mean  omega_bar = {f.omega_bar:.12f}  (sets the orbital basis)")
print(f"  correlation     xi = {f.xi:.12e}  (z = {f.z:+.6f}, xi = z^2)")
print()

e = exact_energy(params)
print("ground-state energy, term by term")
print(f"  kinetic      {e.kinetic:+.12f}")
print(f"  external     {e.external:+.12f}")
print(f"  interaction  {e.interaction:+.12f}")
print(f"  total        {e.total:+.12f}")
print(f"  identity     (omega1 + omega2)/2 = {(f.omega1 + f.omega2) / 2:.12f}")
print()

print("one-body density (even, normalized, Gaussian of width 1/sqrt(omega_s))")
for x in (0.0, 0.5, 1.0, 2.0):
    print(f"  n1({x:3.1f}) = {density(params, x):.10f}")
print()

print("effective one-body potential reproducing that density")
v0, mu = effective_potential(params, 0.0)
print(f"  v_eff(x) = omega_s^2 x^2 / 2 + const, chemical potential mu = {mu:.10f}")
print(f"  v_eff(0) = {v0:.10f}")
print()

omega_hf, e_hf = hartree_fock(params)
print("mean-field comparison")
print(f"  self-consistent frequency  {omega_hf:.12f}  (= omega0 sqrt(1 - coupling))")
print(f"  mean-field energy          {e_hf.total:.12f}")
print(f"  exact energy               {e.total:.12f}")
print(f"  correlation energy         {e.total - e_hf.total:+.3e}")

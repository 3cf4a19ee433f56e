"""
Finding parity kicks for a spin chain
=====================================

A kick operator must anti-commute with the Hamiltonian. For Pauli-sum
Hamiltonians this reduces to bit arithmetic on the symplectic masks, so we
can list every Pauli string that qualifies.
"""

import numpy as np

from paritykick import PauliSum, anticommutant, to_matrix
from paritykick.experiments import HeisenbergDM, IsingChain

# Three-site Ising chain with a transverse field on the middle site only
h = PauliSum([(2.0, "ZZI"), (4.0, "IZZ"), (6.0, "IXI")])
kicks = anticommutant(h)
print("kicks for the three-site chain:", " ".join(k.label for k in kicks))

# Each one flips the sign of H under conjugation
hm = to_matrix(h)
for k in kicks:
    a = to_matrix(k)
    print(f"  {k.label}: ||AH + HA|| = {np.linalg.norm(a @ hm + hm @ a):.1e}")

# Two qubits with a Dzyaloshinskii-Moriya term
dm = HeisenbergDM(J1=1.0, J2=0.5, D=0.3).hamiltonian()
print("kicks for the DM model:", " ".join(k.label for k in anticommutant(dm)))

# Longer chains with a field on every site admit exactly two alternating kicks
chain = IsingChain(J=(1.0, 0.4, -0.8, 0.3, 1.1), h=(0.5, 0.9, 0.2, 0.7, 0.4, 0.6))
print("kicks for a six-site chain:", " ".join(k.label for k in anticommutant(chain.hamiltonian())))

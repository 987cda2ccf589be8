"""Certified vanishing of coherent cohomology of automorphic bundles on the
mod-p Siegel variety, via generalized Hasse invariants and propagation."""

from .hasse import (
    AmpMode, Divisor, chi_of, divisor, hasse_criterion, in_C_Ha,
    in_C_amp_proxy, orbitally_p_close, z0_ample,
)
from .rootsys import ParabolicType, SystemContext, plethysm_weights
from .vanishing import (
    VanishingLedger, WeightBox, compute, compute_all, fixpoint, g_apply,
    vanishes,
)
from .weyl import WeylElt, from_word, reduced_word

__version__ = "0.1.0"

"""Bounds on rational point counts of genus-3 curves over finite fields.

The package mechanizes the arithmetic behind the sharp genus-3 Serre-Weil
defect results: canonical decompositions q = x**2 + x + a, zeta-type
admissibility, hermitian forms over imaginary quadratic orders, brute-force
verification of the explicit record curves, diophantine exclusion scans, and
a per-q bound report assembling it all with re-checkable certificates.

Modules
-------
arith    prime powers, exact helpers, small finite fields F_{p^e}
serre    canonical decomposition (x, a, m, d, d') and the defect-2 type test
weil     real Weil polynomials, point-count admissibility, Waterhouse traces
qorder   imaginary quadratic orders R_d: norms, class numbers, lattice geometry
hermite  positive definite hermitian forms: reduction, enumeration, searches
curves   explicit genus-3 models and brute-force point counting
dioph    bounded diophantine scans with modular emptiness certificates
bounds   the per-q analysis producing BoundReport certificates
cli      command-line interface (analyze / count / hermitian / dioph / zeta)
"""

from .arith import FiniteField, PrimePower, factor_prime_power, field_make, isqrt
from .bounds import BoundReport, analyze, glue_feasibility_defect2, ibukiyama_count, unglue_obstruction_defect2
from .curves import count_model, model_from_dict, model_to_dict, zeta_from_counts
from .dioph import check_5e_family, divisibility_report, mod_obstruction, solve_pow_eq_quadratic, solve_x2_plus_c
from .hermite import (
    HermitianForm2,
    HermitianForm3,
    enumerate_reduced2,
    hoffmann_exists,
    is_indecomposable,
    reduce2,
    represents_one,
    search_unimodular_indecomposable3,
)
from .qorder import OrderElement, QuadOrder, class_number, closest_element, covering_radius_sq, represents_norm
from .serre import Family, SerreDecomposition, decompose, defect2_type_forced, theorem_family
from .weil import RealWeilPoly, admissible, counts_from_type, elliptic_trace_exists, type_to_poly

__version__ = "0.1.0"

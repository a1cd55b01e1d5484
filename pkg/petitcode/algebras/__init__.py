from .petit import DivisionReport
from .petit import DivisionStatus
from .petit import PetitAlgebra
from .petit import PetitElement
from .petit import cyclic_modulus
from .petit import is_division
from .petit import make_petit

from .cyclic import CoefficientwiseMap
from .cyclic import CyclicAlgebraRing
from .cyclic import CyclicQuotientReport
from .cyclic import GeneralizedCyclicSpec
from .cyclic import cyclic_quotient_report
from .cyclic import make_iterated
from .cyclic import validate_generalized_cyclic

from .representation import forms_agree
from .representation import gamma
from .representation import gamma_compatibility
from .representation import iterated_coordinates
from .representation import iterated_matrix
from .representation import matrix_vector
from .representation import right_matrix

from .structure import ClaimCheck
from .structure import Ideal
from .structure import NucleiReport
from .structure import Subspace
from .structure import associator_tensor
from .structure import check_claim
from .structure import division_agreement
from .structure import find_zero_divisor
from .structure import nuclei
from .structure import orbit_length
from .structure import right_nucleus_by_invariance
from .structure import scalars_in_nuclei
from .structure import structure_tensor
from .structure import two_sided_ideals

from .natural import NaturalOrder
from .natural import charpoly_annihilation_check
from .natural import natural_order

from .quotient import ComponentAlgebra
from .quotient import DecompositionReport
from .quotient import QuotientAlgebra
from .quotient import decompose_quotient
from .quotient import project_component
from .quotient import reduce_mod
from .quotient import slot_permutation_holds

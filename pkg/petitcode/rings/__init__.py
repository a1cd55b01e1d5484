from .base import CoefficientRing
from .integral import IntegralRing
from .quotient import FiniteQuotientRing
from .quotient import InducedMap
from .quotient import build_quotient
from .quotient import induce_map

from .decomposition import LocalRingReport
from .decomposition import RingComponent
from .decomposition import SplittingReport
from .decomposition import SubRing
from .decomposition import additive_span
from .decomposition import center_image
from .decomposition import component_orbits
from .decomposition import crt_decompose
from .decomposition import fixed_subring
from .decomposition import idempotents
from .decomposition import local_ring_report
from .decomposition import nilpotent_elements
from .decomposition import order_slots
from .decomposition import powers_rank
from .decomposition import primitive_idempotents
from .decomposition import splitting_report

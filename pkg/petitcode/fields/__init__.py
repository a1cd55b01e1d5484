from .base import ComplexEmbedding
from .base import FieldAutomorphism
from .base import FieldDerivation
from .base import FieldElement
from .base import IntegralIdeal
from .base import NumberField
from .base import Subfield
from .base import element_inverse
from .base import element_mul
from .base import is_fixed_by
from .base import power_independence

from .loaders import load_field

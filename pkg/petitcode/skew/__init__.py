from .polynomial import NEG_INF
from .polynomial import NegInf
from .polynomial import SkewPoly
from .polynomial import SkewPolyRing

from .matrices import charpoly
from .matrices import det_exact
from .matrices import det_permutation
from .matrices import elementary_divisors
from .matrices import identity_matrix
from .matrices import integer_inverse
from .matrices import matmul
from .matrices import nullspace_mod_p
from .matrices import rank_over_q
from .matrices import rational_inverse
from .matrices import rref_mod_p
from .matrices import smith_normal_form
from .matrices import solve_rational

from .polynomials import ModPPoly
from .polynomials import factor_mod_p
from .polynomials import is_irreducible_mod_p
from .polynomials import is_prime
from .polynomials import monic_polynomials

from .codes import OuterCode
from .codes import add_words
from .codes import base_code
from .codes import distance
from .codes import first_coordinates
from .codes import full_code
from .codes import hamming_distance
from .codes import parity_code
from .codes import prescribed_distance_code
from .codes import repetition_code
from .codes import weight

from .coset import BoundReport
from .coset import CosetCodeword
from .coset import FullDiversityReport
from .coset import InnerCodebook
from .coset import alpha_magnitudes
from .coset import bound_check
from .coset import box_elements
from .coset import embedded_det
from .coset import enumerate_coset_code
from .coset import full_diversity_check
from .coset import inner_matrix
from .coset import key_bound
from .coset import lift_codeword
from .coset import min_det
from .coset import principal_generator
from .coset import project_codeword
from .coset import project_matrix
from .coset import resolve_embedding
from .coset import sigma_determinant

from .export import RecordFileIterator
from .export import codeword_record
from .export import format_record
from .export import format_text
from .export import write_records

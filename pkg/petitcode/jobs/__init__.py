from .base import JOB_DEFAULT_CONFIG
from .base import Instance
from .base import Job
from .base import Report
from .base import build_algebra
from .base import build_ideal
from .base import build_instance
from .base import resolve_job_config

from .analyze import ANALYZE_DEFAULT_CONFIG
from .analyze import AnalyzeJob

from .quotient import QUOTIENT_DEFAULT_CONFIG
from .quotient import QuotientJob

from .decompose import DECOMPOSE_DEFAULT_CONFIG
from .decompose import DecomposeJob

from .codebook import CODEBOOK_DEFAULT_CONFIG
from .codebook import CodebookJob
from .codebook import build_outer_code

from .bound import BOUND_DEFAULT_CONFIG
from .bound import BoundJob


JOBS = {"analyze": AnalyzeJob,
        "quotient": QuotientJob,
        "decompose": DecomposeJob,
        "codebook": CodebookJob,
        "bound": BoundJob}

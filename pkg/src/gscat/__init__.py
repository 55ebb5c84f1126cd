__title__ = 'gscat'
__license__ = 'MIT'
__version__ = '0.1.0'

import logging

from gscat.core import GsPresentation, LawReport, merge_reports
from gscat.errors import GsError

logging.getLogger(__name__).addHandler(logging.NullHandler())

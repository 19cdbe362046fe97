from CategoryTools.util.errors import (CompositionError, SizeLimitError,
                                       InfiniteCategoryError, UnknownNameError,
                                       PresentationError, ShapeError,
                                       UnsupportedInstanceError, DocumentError)
from CategoryTools.util.report import LawReport
from CategoryTools.util.helper import max_search, check_guard, SearchBudget

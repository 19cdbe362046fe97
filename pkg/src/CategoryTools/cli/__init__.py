from CategoryTools.cli.documents import (KINDS, CATEGORY_KINDS, parse_document, serialize,
                                         DocumentBuilder, build_category, build_functor)

from CategoryTools.sets.finset import (FinSet, FinFun, ProductCone,
                                       CoproductCocone, identity, constant,
                                       compose, compose_classical,
                                       enumerate_functions, count_functions,
                                       function_index, function_at, product,
                                       coproduct, product_map, exponential,
                                       curry, uncurry)

from CategoryTools.categories.fincat import (FinCat, HomEnumeration, path_name,
                                             require_closed)
from CategoryTools.categories.constructors import (
    PreorderPresentation, FiniteMonoidPresentation, GraphPresentation, op_name,
    from_preorder, from_monoid, from_graph, opposite, product_category,
    terminal_category, interval_category, discrete_category, cyclic_monoid,
    boolean_and_monoid, boolean_or_monoid, trivial_monoid, monoid_by_name)
from CategoryTools.categories.universe import (universe_category, SetCategory,
                                               UNIVERSE_KINDS)
from CategoryTools.categories.laws import check_laws
from CategoryTools.categories.sampled import (LazyCategory, MatrixCategory,
                                              LawSampler, sampled_laws)

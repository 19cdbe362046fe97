from CategoryTools.monads.kleisli import (
    InstanceParams, KleisliTriple, DerivedKleisliTriple, MonadSpec,
    kleisli_to_monad, monad_to_kleisli, check_kleisli_laws, spread,
    check_monad_laws, check_conversion_roundtrip, kleisli_category)
from CategoryTools.monads.instances import (
    ListTriple, TreeTriple, ExceptionTriple, PowersetTriple, ReaderTriple,
    ContinuationTriple, Leaf, Node, show_tree, tree_depth, INSTANCES, instance,
    check_list_bind_distributes)

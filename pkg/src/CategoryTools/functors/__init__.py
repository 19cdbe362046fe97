from CategoryTools.functors.functor import (
    FunctorData, IdentityFunctor, ComposedFunctor, ContravariantFunctorData,
    identity_functor, constant_functor, compose_functors, same_functor,
    check_structure, check_functor, enumerate_functors, check_functor_composition,
    check_contravariant_functor)
from CategoryTools.functors.natural import (
    NatTransData, check_naturality, identity_transformation, vcompose, hcompose,
    hcompose_alternate, hcompose_agreement, enumerate_transformations,
    functor_category, find_natural_iso)
from CategoryTools.functors.set_functors import (
    SetFunctor, ListFunctor, MaybeFunctor, TimesFunctor, PlusFunctor,
    ReaderFunctor, HomFunctor, PowersetFunctor, hom_functor, builtin_set_functor,
    powerset_inverse_image, check_contravariant, powerset_functor_data)
from CategoryTools.functors.equivalence import (
    FunctorClassification, quasi_inverse, classify_functor, finset_to_finord,
    forget_poset, action_of, check_action_laws, is_equivariant,
    check_equivariance_characterization, monoid_homomorphisms,
    check_monoid_functor_correspondence)

from CategoryTools.recursion.polynomial import (
    PolyF, Const, Id, Param, Sum, Prod, Term, polyF_apply, polyF_map, children,
    in_, out, term_depth, enumerate_terms, nat_functor, list_functor, btree_functor,
    bool_functor, coproduct_functor, exp_functor, list_bifunctor, btree_bifunctor,
    functor_by_name, ZERO, NIL, TRUE, FALSE, succ, nat_term, term_to_nat, cons,
    list_term, term_to_list, leaf, node, int_, plus, squared, DATATYPES, parse_term,
    render_term)
from CategoryTools.recursion.conat import Conat, STAR, conat_out, truncated_conats
from CategoryTools.recursion.algebra import (
    AlgebraSpec, initial_algebra, maybe_algebra, bool_algebra, cata, run,
    check_cata_laws, count_homomorphisms, check_is_catamorphism,
    algebra_homomorphisms, conat_algebra, check_conat_not_initial, lambek_check,
    FusionReport, fusion_check, id_algebra_category,
    initial_object_is_initial_algebra_of_id, terminal_object_is_terminal_coalgebra_of_id,
    mu_as_functor, check_mu_functor_laws, monoid_as_algebra)
from CategoryTools.recursion.folds import (
    FOLDS, EXP_FOLDS, fold_library, apply_fold, exp_algebra, FUSION_DEMOS, fusion_demo,
    check_fold_identities)
from CategoryTools.recursion.coalgebra import (
    CoalgebraSpec, all_coalgebras, ana_conat, check_conat_terminality,
    truncated_conat_coalgebra, check_identity_anamorphism, unfold_conat, conat_in,
    dual_lambek_check, is_coalgebra_morphism, coalgebra_category, coalgebra_category_check,
    StreamProc, stream_take, nats, constant, iterate, zip_streams, diagonal,
    bisimilar_up_to, check_stream_equations, STREAMS, stream_by_name)

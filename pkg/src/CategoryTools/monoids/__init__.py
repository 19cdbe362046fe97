from CategoryTools.monoids.free_monoid import (
    Word, words, canonical_injection, FreeMonoid, lift, check_free_monoid_laws,
    is_bounded_hom, bounded_homs, check_uvp, free_map, check_free_functor_laws,
    MonoidHom, BoundedMonoidCategory, FreeFunctor, ForgetfulFunctor,
    free_forget_adjunction, check_free_triangles, check_free_forget_adjunction)

use std::sync::Arc;

use proptest::prelude::*;

use twinllt::characters::{frobenius_ch, induced_young, palindromicity_check, ClassFunction, Twist, YoungRep};
use twinllt::combinat::{permutations, Subset};
use twinllt::gkm::{
    degree_piece, localization_pushforward, quotient_graded_character, xi_transport, Action, EquivariantClass,
    Flavor, Generators, GkmModel, XiDirection,
};
use twinllt::hessgraph::{csf, hessenberg_all, llt, HessenbergFunction};
use twinllt::permco::{coinvariant_graded_character, f_vector};
use twinllt::{QRat, Q};

fn hf(s: &str) -> HessenbergFunction {
    s.parse().unwrap()
}

fn combination(space: &twinllt::gkm::GkmSpace, coeffs: &[i64]) -> EquivariantClass {
    let n = space.model().n();
    let mut f = EquivariantClass::constant(n, twinllt::TPoly::zero(n));
    for (j, c) in coeffs.iter().enumerate().take(space.dim()) {
        f = f.add(&space.class(j).scale(&Q::from_integer((*c).into())));
    }
    f
}

#[test]
fn degree_piece_bases_satisfy_the_congruences() {
    for n in 1..=3 {
        for h in hessenberg_all(n).unwrap() {
            for flavor in [Flavor::X, Flavor::Y] {
                let model = Arc::new(GkmModel::new(&h, flavor).unwrap());
                for d in 0..=h.size() + 1 {
                    let space = degree_piece(&model, d).unwrap();
                    for j in 0..space.dim() {
                        assert!(model.satisfies(&space.class(j)), "{h} {flavor:?} d={d} class {j}");
                    }
                }
            }
        }
    }
}

#[test]
fn twin_quotient_is_palindromic_and_regular() {
    for n in 1..=3 {
        for h in hessenberg_all(n).unwrap() {
            let r = quotient_graded_character(&h, Flavor::Y, Action::Dagger, Generators::TVars, h.size() + 1).unwrap();
            assert!(palindromicity_check(&r, &QRat::q_pow(h.size() as i64), Twist::Sign, &QRat::one()), "{h}");
            assert_eq!(r.eval_q(&Q::from_integer(1.into())).unwrap(), ClassFunction::regular(n).unwrap(), "{h}");
            assert!(frobenius_ch(&r).same_as(&llt(&h).unwrap()), "{h}");
        }
    }
}

#[test]
fn full_flag_dot_action_is_trivial() {
    for n in 1..=3 {
        let h = HessenbergFunction::complete(n).unwrap();
        let r = quotient_graded_character(&h, Flavor::X, Action::Dot, Generators::TVars, h.size() + 1).unwrap();
        let dims = r.degree();
        assert_eq!(r, ClassFunction::trivial(n).unwrap().scale(&dims));
        assert!(frobenius_ch(&r).omega().same_as(&csf(&h).unwrap()));
    }
}

#[test]
fn star_and_dagger_agree_with_coinvariants() {
    for n in 1..=3 {
        let h = HessenbergFunction::complete(n).unwrap();
        let d = h.size() + 1;
        let star = quotient_graded_character(&h, Flavor::X, Action::Star, Generators::TVars, d).unwrap();
        let dagger = quotient_graded_character(&h, Flavor::Y, Action::Dagger, Generators::TVars, d).unwrap();
        let co = coinvariant_graded_character(n).unwrap();
        assert_eq!(star, co);
        assert_eq!(dagger, co);
    }
}

#[test]
fn twin_rejects_x_class_generators() {
    let model = Arc::new(GkmModel::new(&hf("2,3,3"), Flavor::Y).unwrap());
    let s0 = degree_piece(&model, 0).unwrap();
    let s1 = degree_piece(&model, 1).unwrap();
    assert!(twinllt::gkm::ideal_piece(&s1, Some(&s0), Generators::XClasses).is_err());
    assert!(quotient_graded_character(&hf("2,3,3"), Flavor::Y, Action::Dot, Generators::TVars, 3).is_err());
}

#[test]
fn orbit_sizes_count_faces() {
    for n in 1..=6 {
        let total: QRat = Subset::all(n)
            .iter()
            .map(|s| frobenius_ch(&induced_young(s, YoungRep::Trivial).unwrap()).dimension_of())
            .fold(QRat::zero(), |a, b| &a + &b);
        let faces: u64 = f_vector(n).unwrap().iter().sum();
        assert_eq!(total, QRat::from_int(faces as i64), "n={n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn xi_intertwines_on_random_classes(
        d in 0usize..=3,
        coeffs in prop::collection::vec(-3i64..=3, 40),
        sigma in 0usize..6,
    ) {
        let h = hf("2,3,3");
        let model = Arc::new(GkmModel::new(&h, Flavor::Y).unwrap());
        let space = degree_piece(&model, d).unwrap();
        let f = combination(&space, &coeffs);
        let s = &permutations(3).unwrap()[sigma];
        let lhs = xi_transport(&h, &f.act(s, Action::Dagger), XiDirection::YToX).unwrap();
        let rhs = xi_transport(&h, &f, XiDirection::YToX).unwrap().act(s, Action::Dot);
        prop_assert_eq!(&lhs, &rhs);
        let back = xi_transport(&h, &rhs, XiDirection::XToY).unwrap();
        prop_assert_eq!(back, f.act(s, Action::Dagger));
    }

    #[test]
    fn localization_is_equivariant_on_random_classes(
        d in 0usize..=4,
        coeffs in prop::collection::vec(-3i64..=3, 60),
        sigma in 0usize..6,
    ) {
        let h = hf("2,3,3");
        let model = Arc::new(GkmModel::new(&h, Flavor::X).unwrap());
        let space = degree_piece(&model, d).unwrap();
        let f = combination(&space, &coeffs);
        let s = &permutations(3).unwrap()[sigma];
        let p = localization_pushforward(&model, &f).unwrap();
        let q = localization_pushforward(&model, &f.act(s, Action::Dot)).unwrap();
        prop_assert_eq!(q, p.permute_vars(s));
        if d < h.size() {
            prop_assert!(p.is_zero());
        }
    }
}

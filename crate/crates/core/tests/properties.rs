use proptest::prelude::*;

use skewsym::colored::{rhs_sqmnr3, rhs_sqmnr_prime};
use skewsym::hallittlewood::hl_p_skew;
use skewsym::jdt::{rectification_is_order_independent, rectify, standard_tableaux};
use skewsym::tableaux::{check_inverse_pairing, ssyt};
use skewsym::{Partition, QPoly, SkewSchurSum, SkewShape, SkewTableau, StandardTableau, SymFunc};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v)
    })
}

/// A skew shape `λ/μ` obtained by trimming a random amount from each row.
fn skew_shape(max_len: usize, max_part: usize) -> impl Strategy<Value = SkewShape> {
    partition(max_len, max_part)
        .prop_flat_map(|lam| {
            let n = lam.len();
            (Just(lam), prop::collection::vec(0.0f64..=1.0, n))
        })
        .prop_map(|(lam, fracs)| {
            let mut inner: Vec<usize> = Vec::new();
            for (i, f) in fracs.iter().enumerate() {
                let cap = lam.part(i + 1).min(inner.last().copied().unwrap_or(usize::MAX));
                inner.push((f * cap as f64).floor() as usize);
            }
            SkewShape::new(lam, Partition::new(inner)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partition_text_and_conjugate(lam in partition(6, 6)) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam.clone());
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn skew_shape_text_and_ribbon_stats(s in skew_shape(5, 5)) {
        prop_assert_eq!(s.to_string().parse::<SkewShape>().unwrap(), s.clone());
        prop_assert_eq!(s.conjugate().conjugate(), s.clone());
        if let Ok(st) = s.ribbon_stats() {
            prop_assert_eq!(st.hgt + st.wt + st.rib, s.size());
            prop_assert_eq!(st.rib, s.components().len());
        }
        prop_assert_eq!(s.is_horizontal_strip(), s.conjugate().is_vertical_strip());
    }

    #[test]
    fn squarefree_coefficient_counts_standard_tableaux(s in skew_shape(3, 3)) {
        let n = s.size().max(1);
        let ones = Partition::new(vec![1; s.size()]);
        let count = standard_tableaux(&s).len() as i64;
        prop_assert_eq!(SymFunc::skew_schur(&s, n).coeff(&ones), QPoly::constant(count));
        prop_assert_eq!(SymFunc::skew_schur(&s.conjugate(), n).coeff(&ones), QPoly::constant(count));
    }

    #[test]
    fn product_is_commutative(a in skew_shape(3, 3), b in skew_shape(2, 3)) {
        let n = (a.size() + b.size()).max(1);
        let x = SymFunc::skew_schur(&a, n);
        let y = SymFunc::skew_schur(&b, n).scale(&"1 - q".parse::<QPoly>().unwrap());
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn expansions_render_and_reparse(s in skew_shape(3, 3), r in 1usize..=3) {
        let sum = rhs_sqmnr_prime(s.outer(), s.inner(), r);
        prop_assert_eq!(sum.render().parse::<SkewSchurSum>().unwrap(), sum.clone());
        prop_assert_eq!(sum.render_inline().parse::<SkewSchurSum>().unwrap(), sum.clone());
        let n = s.size() + r;
        let f = rhs_sqmnr3(s.outer(), s.inner(), r).expand(n);
        prop_assert_eq!(SymFunc::parse(&f.render(), n).unwrap(), f);
    }

    #[test]
    fn quantum_rule_holds(s in skew_shape(3, 3), r in 1usize..=3) {
        let n = s.size() + r;
        let lhs = &SymFunc::skew_schur(&s, n) * &SymFunc::qpower(r, n);
        prop_assert_eq!(rhs_sqmnr_prime(s.outer(), s.inner(), r).expand(n), lhs);
    }

    #[test]
    fn tableaux_reparse_and_insertion_round_trips(s in skew_shape(3, 3), pick in any::<prop::sample::Index>()) {
        let all: Vec<SkewTableau> = ssyt(&s, 3);
        prop_assume!(!all.is_empty());
        let t = pick.get(&all);
        prop_assert_eq!(t.to_string().parse::<SkewTableau>().unwrap(), t.clone());
        prop_assert_eq!(t.to_line().parse::<SkewTableau>().unwrap(), t.clone());
        prop_assert!(check_inverse_pairing(t, 3).is_ok());
    }

    #[test]
    fn rectification_is_straight_and_unique(s in skew_shape(3, 3), pick in any::<prop::sample::Index>()) {
        let all: Vec<StandardTableau> = standard_tableaux(&s);
        prop_assume!(!all.is_empty());
        let t = pick.get(&all);
        prop_assert_eq!(t.to_string().parse::<StandardTableau>().unwrap(), t.clone());
        let r = rectify(t);
        prop_assert!(r.is_straight());
        prop_assert_eq!(r.size(), t.size());
        prop_assert!(rectification_is_order_independent(t));
    }

    #[test]
    fn hall_littlewood_at_zero_is_schur(s in skew_shape(3, 3)) {
        let n = s.size().max(1);
        prop_assert_eq!(hl_p_skew(&s, n).specialize(0), SymFunc::skew_schur(&s, n));
    }
}

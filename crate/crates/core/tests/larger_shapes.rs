//! Random checks on shapes a little beyond the exhaustive corpus.

use proptest::prelude::*;

use rpp_lr::rpp_crystal::{lower_rpp, raise_rpp};
use rpp_lr::shapes::Partition;
use rpp_lr::{ceq, enumerate_rpp, height_vector, lower_word, raise_word, reading_word, reconstruct, Filling, SkewShape};

fn skew_shape() -> impl Strategy<Value = SkewShape> {
    prop::collection::vec(1u32..=4, 1..=4).prop_flat_map(|mut outer| {
        outer.sort_unstable_by(|a, b| b.cmp(a));
        let bounds = outer.clone();
        let inner = bounds.iter().map(|&p| 0..=p).collect::<Vec<_>>();
        (Just(outer), inner).prop_map(|(outer, mut inner)| {
            for k in 1..inner.len() {
                inner[k] = inner[k].min(inner[k - 1]);
            }
            SkewShape::new(Partition::new(outer).unwrap(), Partition::new(inner).unwrap()).unwrap()
        })
    })
}

/// A uniformly chosen tableau of the shape, by index into the enumeration.
fn sample(shape: &SkewShape, m: u32, pick: prop::sample::Index) -> Filling {
    let all: Vec<Filling> = enumerate_rpp(shape, m).collect();
    all[pick.index(all.len())].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reading_word_and_heights_determine_the_tableau(shape in skew_shape(), m in 1u32..=4, pick: prop::sample::Index) {
        let t = sample(&shape, m, pick);
        let back = reconstruct(&shape, &reading_word(&t), &height_vector(&t), m).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn operators_follow_the_word_crystal(shape in skew_shape(), m in 2u32..=4, pick: prop::sample::Index, i in 1u32..4) {
        prop_assume!(i < m);
        let t = sample(&shape, m, pick);
        let w = reading_word(&t);
        let f = lower_rpp(&t, i).unwrap();
        prop_assert_eq!(f.as_ref().map(reading_word), lower_word(&w, i));
        let e = raise_rpp(&t, i).unwrap();
        prop_assert_eq!(e.as_ref().map(reading_word), raise_word(&w, i));
        for u in f.iter().chain(e.iter()) {
            prop_assert!(u.is_rpp());
            prop_assert_eq!(height_vector(u), height_vector(&t));
            prop_assert_eq!(ceq(u), ceq(&t));
        }
        if let Some(u) = f {
            prop_assert_eq!(raise_rpp(&u, i).unwrap(), Some(t));
        }
    }
}

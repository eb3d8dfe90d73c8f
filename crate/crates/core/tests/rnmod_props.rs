use proptest::prelude::*;
use strel_core::chainring::{RMatrix, RingSpec};
use strel_core::rnmod::{RnHom, Shape};

fn ring_and_shapes() -> impl Strategy<Value = (RingSpec, Vec<u32>, Vec<u32>, Vec<u32>)> {
    (prop_oneof![Just((2u64, 3u32)), Just((3, 2)), Just((5, 2)), Just((2, 4))]).prop_flat_map(
        |(p, n)| {
            let exps = prop::collection::vec(1..=n, 0..4);
            (
                Just(RingSpec::new(p, n).unwrap()),
                exps.clone(),
                exps.clone(),
                exps,
            )
        },
    )
}

fn shape(r: RingSpec, e: &[u32]) -> Shape {
    Shape::from_unsorted(r, e).unwrap().0
}

/// A well-defined map from raw entries: scale `(i, j)` by `p^{max(μ_j-λ_i,0)}`.
fn hom(s: &Shape, t: &Shape, raw: &[u64]) -> RnHom {
    let r = s.ring();
    let (l, m) = (s.exponents(), t.exponents());
    let mat = RMatrix::from_fn(r, s.rank(), t.rank(), |i, j| {
        let x = raw[(i * 7 + j * 3) % raw.len()];
        r.mul(x, r.int_pow(m[j].saturating_sub(l[i]))) % t.modulus(j)
    });
    RnHom::new(s.clone(), t.clone(), mat).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_is_contravariant_and_involutive(
        (r, a, b, c) in ring_and_shapes(),
        raw in prop::collection::vec(0u64..1000, 1..20),
    ) {
        let (sa, sb, sc) = (shape(r, &a), shape(r, &b), shape(r, &c));
        let f = hom(&sa, &sb, &raw);
        let g = hom(&sb, &sc, &raw.iter().rev().copied().collect::<Vec<_>>());
        prop_assert_eq!(f.then(&g).dual(), g.dual().then(&f.dual()));
        prop_assert_eq!(f.dual().dual(), f.clone());
        prop_assert_eq!(RnHom::identity(&sa).dual(), RnHom::identity(&sa));
    }

    #[test]
    fn tensor_length_is_sum_of_minima((r, a, b, _) in ring_and_shapes()) {
        let (sa, sb) = (shape(r, &a), shape(r, &b));
        let t = sa.tensor(&sb).unwrap();
        let expect: u32 = a.iter().flat_map(|&x| b.iter().map(move |&y| x.min(y))).sum();
        prop_assert_eq!(t.shape.length(), expect);
        let mut seen: Vec<usize> = (0..sa.rank()).flat_map(|i| (0..sb.rank()).map(move |j| (i, j)))
            .map(|(i, j)| t.coord(i, j)).collect();
        seen.sort();
        seen.dedup();
        prop_assert_eq!(seen.len(), sa.rank() * sb.rank());
    }

    #[test]
    fn tensor_of_maps_is_functorial(
        (r, a, b, c) in ring_and_shapes(),
        raw in prop::collection::vec(0u64..1000, 1..20),
    ) {
        let (sa, sb, sc) = (shape(r, &a), shape(r, &b), shape(r, &c));
        let f = hom(&sa, &sb, &raw);
        let g = hom(&sb, &sc, &raw);
        let (ta, tb, tc) = (sa.tensor(&sa).unwrap(), sb.tensor(&sb).unwrap(), sc.tensor(&sc).unwrap());
        let lhs = f.then(&g).tensor(&f.then(&g), &ta, &tc).unwrap();
        let rhs = f.tensor(&f, &ta, &tb).unwrap().then(&g.tensor(&g, &tb, &tc).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factor_through_solves_when_possible(
        (r, a, b, c) in ring_and_shapes(),
        raw in prop::collection::vec(0u64..1000, 1..20),
    ) {
        let (sa, sb, sc) = (shape(r, &a), shape(r, &b), shape(r, &c));
        let f = hom(&sa, &sb, &raw);
        let x = hom(&sb, &sc, &raw.iter().map(|v| v * 5 + 1).collect::<Vec<_>>());
        let target = f.then(&x);
        let y = strel_core::rnmod::factor_through(&f, &target).unwrap();
        prop_assert_eq!(f.then(&y), target);
    }

    #[test]
    fn clip_and_shift_are_functorial(
        (r, a, b, c) in ring_and_shapes(),
        raw in prop::collection::vec(0u64..1000, 1..20),
        m in 0u32..4,
    ) {
        let (sa, sb, sc) = (shape(r, &a), shape(r, &b), shape(r, &c));
        let f = hom(&sa, &sb, &raw);
        let g = hom(&sb, &sc, &raw);
        prop_assert_eq!(f.then(&g).clip(m), f.clip(m).then(&g.clip(m)));
        prop_assert_eq!(f.then(&g).shift_down(m), f.shift_down(m).then(&g.shift_down(m)));
    }
}

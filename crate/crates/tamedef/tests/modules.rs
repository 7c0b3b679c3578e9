use std::sync::Arc;

use proptest::prelude::*;
use tamedef::catalog::{list_families, Family};
use tamedef::module::RepModule;
use tamedef::quiver::PresentedAlgebra;

/// Simples and the recipe modules of a family at n = 4, optionally with P_0.
fn zoo_with(f: Family, projective: bool) -> (Arc<PresentedAlgebra>, Vec<RepModule>) {
    let alg = f.default_algebra(4).unwrap();
    let mut ms: Vec<RepModule> = (0..alg.vertex_count()).map(|v| RepModule::simple(&alg, v)).collect();
    if projective {
        ms.push(RepModule::projective(&alg, 0));
    }
    for r in f.mo_recipes(4).unwrap() {
        ms.push(r.build(&alg).unwrap());
    }
    (alg, ms)
}

fn zoo(f: Family) -> (Arc<PresentedAlgebra>, Vec<RepModule>) {
    zoo_with(f, true)
}

fn nonprojective(f: Family) -> (Arc<PresentedAlgebra>, Vec<RepModule>) {
    zoo_with(f, false)
}

fn pick() -> impl Strategy<Value = (Family, usize, usize, usize)> {
    let fams = list_families();
    (0..fams.len(), any::<prop::sample::Index>(), any::<prop::sample::Index>(), any::<prop::sample::Index>())
        .prop_map(move |(i, a, b, c)| (fams[i], a.index(64), b.index(64), c.index(64)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_is_additive_over_direct_sums((f, a, b, c) in pick()) {
        let (_, ms) = zoo(f);
        let (x, y, z) = (&ms[a % ms.len()], &ms[b % ms.len()], &ms[c % ms.len()]);
        let sum = RepModule::direct_sum(&[x, y]).unwrap();
        prop_assert_eq!(sum.hom_dim(z).unwrap(), x.hom_dim(z).unwrap() + y.hom_dim(z).unwrap());
        prop_assert_eq!(z.hom_dim(&sum).unwrap(), z.hom_dim(x).unwrap() + z.hom_dim(y).unwrap());
    }

    #[test]
    fn hom_from_projective_counts_composition_factors((f, a, _, _) in pick()) {
        let (alg, ms) = zoo(f);
        let m = &ms[a % ms.len()];
        for v in 0..alg.vertex_count() {
            let p = RepModule::projective(&alg, v);
            prop_assert_eq!(p.hom_dim(m).unwrap(), m.dims()[v]);
        }
        let layered: usize = m.radical_layers().iter().flatten().sum();
        prop_assert_eq!(layered, m.dim());
    }

    #[test]
    fn omega_preserves_stable_hom((f, a, b, _) in pick()) {
        let (_, ms) = nonprojective(f);
        let (x, y) = (&ms[a % ms.len()], &ms[b % ms.len()]);
        let (ox, oy) = (x.syzygy().unwrap(), y.syzygy().unwrap());
        prop_assert_eq!(x.stable_hom_dim(y).unwrap(), ox.stable_hom_dim(&oy).unwrap());
    }

    #[test]
    fn constructed_modules_satisfy_relations((f, a, _, _) in pick()) {
        let (_, ms) = nonprojective(f);
        let m = &ms[a % ms.len()];
        prop_assert!(m.satisfies_relations());
        prop_assert_eq!(m.dim(), m.dims().iter().sum::<usize>());
        let om = m.syzygy().unwrap();
        prop_assert!(om.satisfies_relations());
    }

    #[test]
    fn hom_elements_intertwine((f, a, b, _) in pick()) {
        let (_, ms) = zoo(f);
        let (x, y) = (&ms[a % ms.len()], &ms[b % ms.len()]);
        let hom = x.hom(y).unwrap();
        let ones = vec![1u8; hom.dim()];
        let map = hom.combination(&ones, x, y);
        prop_assert!(map.intertwines(x, y));
    }
}

/// Loewy length is at most 4·2^{n−2} + 1, attained by the 3A families; the 2A families have
/// 3·2^{n−2} + 1, the length of (γβα)^{2^{n−2}} plus one.
#[test]
fn projectives_have_simple_socle_and_bounded_length() {
    for f in list_families() {
        for n in f.n_min().max(3)..=5 {
            let alg = f.default_algebra(n).unwrap();
            let m = 1usize << (n - 2);
            let mut socles = Vec::new();
            let mut longest = 0;
            for v in 0..alg.vertex_count() {
                let p = RepModule::projective(&alg, v);
                longest = longest.max(p.radical_layers().len());
                let soc = p.socle_dims();
                assert_eq!(soc.iter().sum::<usize>(), 1, "{} n={n} P{v}: socle {soc:?}", f.name());
                socles.push(soc.iter().position(|&d| d == 1).unwrap());
            }
            assert!(longest <= 4 * m + 1, "{} n={n}: Loewy length {longest}", f.name());
            match f.quiver_id().to_string().as_str() {
                "2A" => assert_eq!(longest, 3 * m + 1, "{} n={n}", f.name()),
                "3A" => assert_eq!(longest, 4 * m + 1, "{} n={n}", f.name()),
                _ => {}
            }
            // Each P_v has socle T_v: the Nakayama permutation is trivial.
            assert_eq!(socles, (0..alg.vertex_count()).collect::<Vec<_>>(), "{} n={n}", f.name());
        }
    }
}

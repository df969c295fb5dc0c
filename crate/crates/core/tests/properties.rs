//! Property tests over random types and arbitrary simple-root subsets.

use proptest::prelude::*;

use lie_gradings::{
    assess_sigma, diagram_automorphisms, graded_dimensions, levi_structure, reductive_dimension,
    sigma_height, verdict_from_dims, witt_dimensions, Family, Root, RootSystem, Sigma,
    SimpleLieType,
};

fn any_type() -> impl Strategy<Value = SimpleLieType> {
    prop::sample::select(SimpleLieType::all_up_to(&Family::ALL, 12))
}

/// A type together with a nonempty subset of its nodes.
fn type_and_sigma() -> impl Strategy<Value = (SimpleLieType, Sigma)> {
    any_type().prop_flat_map(|ty| {
        let n = ty.rank();
        prop::collection::btree_set(1..=n, 1..=n)
            .prop_map(move |set| (ty, Sigma::new(set, n).unwrap()))
    })
}

fn depth(rs: &RootSystem, sigma: &Sigma) -> u32 {
    sigma_height(rs.highest_root(), sigma.indices()).unwrap() as u32
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dimensions_add_up((ty, sigma) in type_and_sigma()) {
        let rs = RootSystem::new(ty);
        let k = depth(&rs, &sigma);
        let d = graded_dimensions(&rs, &sigma, k).unwrap();
        prop_assert_eq!(d.total_dimension(), ty.dimension());
        prop_assert!(d.neg_dims.iter().all(|&x| x > 0), "every degree down to -k is occupied");
        prop_assert!(graded_dimensions(&rs, &sigma, k + 1).is_err());
    }

    #[test]
    fn levi_agrees_with_root_count((ty, sigma) in type_and_sigma()) {
        let rs = RootSystem::new(ty);
        let k = depth(&rs, &sigma);
        let d = graded_dimensions(&rs, &sigma, k).unwrap();
        let levi = levi_structure(ty, &sigma).unwrap();
        prop_assert_eq!(reductive_dimension(&levi), d.dim_n0);
        prop_assert_eq!(levi.center_dim, sigma.len() as u64);
        prop_assert_eq!(levi.factors.iter().map(|f| f.rank()).sum::<usize>(), ty.rank() - sigma.len());
    }

    #[test]
    fn automorphism_invariance((ty, sigma) in type_and_sigma()) {
        let rs = RootSystem::new(ty);
        let k = depth(&rs, &sigma);
        let base = assess_sigma(&rs, &sigma, k).unwrap();
        for p in diagram_automorphisms(&rs.dynkin_diagram()) {
            let image = sigma.mapped(&p);
            prop_assert_eq!(depth(&rs, &image), k);
            let other = assess_sigma(&rs, &image, k).unwrap();
            prop_assert_eq!(&other.dims.neg_dims, &base.dims.neg_dims);
            prop_assert_eq!(&other.verdict.free, &base.verdict.free);
            prop_assert_eq!(&other.levi, &base.levi);
        }
    }

    #[test]
    fn pair_excludes_freedom((ty, sigma) in type_and_sigma()) {
        let rs = RootSystem::new(ty);
        let e = assess_sigma(&rs, &sigma, depth(&rs, &sigma)).unwrap();
        if e.commuting_pair.is_some() {
            prop_assert!(!e.verdict.free);
        }
        if let Some((a, b)) = &e.commuting_pair {
            prop_assert_eq!(sigma_height(a, sigma.indices()).unwrap(), 1);
            prop_assert_eq!(sigma_height(b, sigma.indices()).unwrap(), 1);
            let sum: Vec<i32> = a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x + y).collect();
            prop_assert!(!rs.is_root(&sum).unwrap());
            prop_assert_ne!(a, b);
        }
    }

    #[test]
    fn necklace_identity(r in 1u64..2000, k in 1u32..7) {
        // sum over d | n of d * dim f_{-d} = r^n
        let w = witt_dimensions(r, k).unwrap().dims;
        for n in 1..=k as usize {
            let total: u128 = (1..=n).filter(|d| n % d == 0).map(|d| d as u128 * w[d - 1]).sum();
            prop_assert_eq!(total, (r as u128).pow(n as u32));
        }
    }

    #[test]
    fn witt_dims_are_free(r in 1u64..500, k in 1u32..6) {
        let w = witt_dimensions(r, k).unwrap().dims;
        let dims: Vec<u64> = w.iter().map(|&x| x as u64).collect();
        let v = verdict_from_dims(&dims, true).unwrap();
        prop_assert!(v.free);
        prop_assert_eq!(v.r, Some(r));
        prop_assert!(!verdict_from_dims(&dims, false).unwrap().free);
    }

    #[test]
    fn perturbed_dims_are_not_free(r in 2u64..500, k in 2u32..6, at in 0usize..6, delta in 1u64..5) {
        let mut dims: Vec<u64> = witt_dimensions(r, k).unwrap().dims.iter().map(|&x| x as u64).collect();
        let at = at % dims.len();
        dims[at] += delta;
        prop_assert!(!verdict_from_dims(&dims, true).unwrap().free);
    }

    #[test]
    fn type_round_trips(ty in any_type()) {
        let s = ty.to_string();
        prop_assert_eq!(s.parse::<SimpleLieType>().unwrap(), ty);
        let json = serde_json::to_string(&ty).unwrap();
        prop_assert_eq!(&json, &format!("\"{s}\""));
        prop_assert_eq!(serde_json::from_str::<SimpleLieType>(&json).unwrap(), ty);
    }

    #[test]
    fn sigma_round_trips((ty, sigma) in type_and_sigma()) {
        let csv = sigma.indices().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        prop_assert_eq!(&Sigma::parse(&csv, ty.rank()).unwrap(), &sigma);
        let json = serde_json::to_string(&sigma).unwrap();
        prop_assert_eq!(&serde_json::from_str::<Sigma>(&json).unwrap(), &sigma);
    }

    #[test]
    fn scan_entry_round_trips((ty, sigma) in type_and_sigma()) {
        let rs = RootSystem::new(ty);
        let e = assess_sigma(&rs, &sigma, depth(&rs, &sigma)).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        let back: lie_gradings::ScanEntry = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn root_validation(coeffs in prop::collection::vec(-3i32..4, 1..6)) {
        let ok = coeffs.iter().any(|&c| c != 0)
            && (coeffs.iter().all(|&c| c >= 0) || coeffs.iter().all(|&c| c <= 0));
        prop_assert_eq!(Root::new(coeffs).is_ok(), ok);
    }

    #[test]
    fn malformed_input_is_an_error(s in "\\PC{0,8}") {
        let _ = s.parse::<SimpleLieType>();
        let _ = Sigma::parse(&s, 8);
    }
}
